#pragma once

#include "kronhwv/bigint.hpp"
#include "kronhwv/cayley.hpp"
#include "kronhwv/coefficients.hpp"
#include "kronhwv/duality.hpp"
#include "kronhwv/enumerate.hpp"
#include "kronhwv/expansion.hpp"
#include "kronhwv/hwv.hpp"
#include "kronhwv/hypermatrix.hpp"
#include "kronhwv/kronecker.hpp"
#include "kronhwv/latin.hpp"
#include "kronhwv/linalg.hpp"
#include "kronhwv/parallel.hpp"
#include "kronhwv/partition.hpp"
#include "kronhwv/relations.hpp"
#include "kronhwv/report.hpp"
#include "kronhwv/signature.hpp"
#include "kronhwv/table.hpp"

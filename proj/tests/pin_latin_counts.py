"""Count Latin squares of order 2..4 by plain enumeration; prints k,count."""
from itertools import permutations


def count(k):
    rows = list(permutations(range(k)))

    def extend(chosen):
        if len(chosen) == k:
            return 1
        total = 0
        for r in rows:
            if all(all(r[c] != q[c] for c in range(k)) for q in chosen):
                total += extend(chosen + [r])
        return total

    return extend([])


if __name__ == "__main__":
    for k in (2, 3, 4):
        print(f"{k},{count(k)}")

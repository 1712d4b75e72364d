"""Raise path adjacency matrices to their own size and watch them vanish.

The path graph on n vertices has the tridiagonal 0/1 adjacency matrix A.
Over GF(2), whenever n = 2^m - 1, the n-th power of A is the zero matrix,
and no smaller power is. This script shows the whole power ladder for
P_7, then sweeps the sizes a laptop handles instantly.
"""

from nilpath import mat_is_zero, mat_pow, nilpotency_index, path_adjacency


def show(matrix, label):
    print(f"{label}:")
    for row in matrix.to_lists():
        print("   " + " ".join(str(b) for b in row))
    print()


def main():
    n = 7
    a = path_adjacency(n)
    show(a, "A = adjacency of P_7")
    for k in (2, 4, 6, 7):
        show(mat_pow(a, k), f"A^{k}")
    print("A^6 still has its corner bit set: the straight walk 1-2-3-4-5-6-7")
    print(f"  entry (1, 7) of A^6 = {mat_pow(a, 6).bit(1, 7)}")
    print(f"  nilpotency index of A = {nilpotency_index(a)}")
    print()

    print("The same story at every size n = 2^m - 1:")
    for m in range(1, 11):
        n = 2**m - 1
        a = path_adjacency(n)
        vanished = mat_is_zero(mat_pow(a, n))
        print(f"  m = {m:2d}  n = {n:5d}  A^n = 0: {vanished}")
    print()

    print("Sizes off that family behave differently:")
    for n in (2, 4, 5, 6, 8, 12):
        index = nilpotency_index(path_adjacency(n))
        verdict = f"index {index}" if index is not None else "not nilpotent"
        print(f"  n = {n:2d}  {verdict}")


if __name__ == "__main__":
    main()

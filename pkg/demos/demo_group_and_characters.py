"""Tour of the group plumbing: digit ladders, coset reps, character tables."""

import numpy as np

import vilenkin as vk


def show_group(radices):
    ns = vk.number_system(radices)
    print(f"radices {radices}: M ladder = {list(ns.M)}")

    # digit expansion round trip
    for n in (0, 1, 7, ns.cell_count - 1):
        d = vk.digits_of(ns, n)
        print(f"  n={n:4d} digits={d} back={vk.index_of(ns, d)}")

    # coset representatives at level 2 and their first nonzero digit
    k = 2
    print(f"  coset reps at level {k}:")
    for beta in range(1, ns.M[k]):
        z = vk.coset_rep(ns, beta, k)
        print(f"    beta={beta}  digits={z.digits[:k]}")

    # orthonormality of the character table
    F = vk.character_block(ns, 0, ns.cell_count)
    gram = F.conj().T @ F / ns.cell_count
    print(f"  gram residual = {np.max(np.abs(gram - np.eye(ns.cell_count))):.3e}")
    res = vk.character_shift_residual(ns)
    print(f"  shift identity residual = {res:.3e}")


if __name__ == "__main__":
    show_group([2, 2, 2, 2])
    show_group([2, 3, 4])

"""Uniform convergence of negative-order Cesaro means on a lacunary function.

The function f = sum_k M_k^{-1} Re psi_{M_k} has summable dyadic
oscillations, so its means sigma_n^{-alpha} f converge uniformly for
every alpha in (0, 1).  The table shows the sup error shrinking along
the scale ladder, faster for small alpha.
"""

import numpy as np

import vilenkin as vk
from vilenkin import families, oscillation, transform


def main():
    ns = vk.number_system([2] * 10)
    f = families.lacunary(ns, families.inverse_scale_coeffs(ns))

    alphas = (0.25, 0.5, 0.75)
    print("n      " + "".join(f"  a={a:<10}" for a in alphas))
    for k in range(1, ns.resolution):
        n = ns.M[k]
        errs = [transform.sup_distance(transform.cesaro_mean(f, n, a), f)
                for a in alphas]
        print(f"M_{k} = {n:4d}" + "".join(f"  {e:<11.4e}" for e in errs))

    for a in alphas:
        rep = oscillation.oscillation_series(f, a)
        print(f"oscillation series, alpha={a}: partials "
              + " ".join(f"{p:.3f}" for p in rep.partials[-4:]))

    # a jump is no obstacle here: the indicator depends on one digit only,
    # so every oscillation beyond scale 1 vanishes and the means settle fast
    g = families.digit_indicator(ns, 1, 0)
    errs = [transform.sup_distance(transform.cesaro_mean(g, ns.M[k], 0.5), g)
            for k in range(1, ns.resolution)]
    print("digit indicator, alpha=0.5 sup errors:",
          " ".join(f"{e:.3f}" for e in errs))


if __name__ == "__main__":
    main()

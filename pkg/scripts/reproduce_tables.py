"""Print the worked examples, the integer-coefficient parameters and the F(n) table."""

from apsum.integrality import F_val, is_integral_poly, theorem2_predicate
from apsum.powersum import coeffs_bernoulli, coeffs_theorem1

EXAMPLES = [(1, 0, 1), (2, 5, 2), (2, 1, 3), (2, 3, 3)]
INTEGER_ROWS = [(2, 1, 3), (2, 3, 3), (2, 5, 3), (4, 3, 3), (4, 5, 3)]


def main():
    print("Example polynomials (Whitney/Stirling route, checked against the Bernoulli route)")
    for m, r, n in EXAMPLES:
        poly = coeffs_theorem1(m, r, n)
        assert poly == coeffs_bernoulli(m, r, n)
        print(f"  S(m={m}, r={r}, n={n}) = {poly.render()}")

    print("\nParameters with integer coefficients")
    print("  m  r  n  integral  F(n)|m")
    for m, r, n in INTEGER_ROWS:
        print(f"  {m}  {r}  {n}  {is_integral_poly(m, r, n)!s:8}  {theorem2_predicate(m, n)}")

    print("\nF(n), n = 1..20")
    cols = [range(k, k + 5) for k in (1, 6, 11, 16)]
    for i in range(5):
        print("  " + " | ".join(f"{c[i]:2d} {F_val(c[i]):5d}" for c in cols))


if __name__ == "__main__":
    main()

"""Gallery of one-sided finite-difference weights.

The minimal (m+p)-point one-sided stencil for the m-th derivative at order
p is unique; solving its moment system in exact rational arithmetic gives
the familiar textbook fractions.
"""

from fcont import StencilSpec, make_stencil


def main():
    for m in range(1, 5):
        print(f"d^{m}/dx^{m}:")
        for p in range(1, 5):
            weights = make_stencil(StencilSpec(m, p)).exact_weights
            pretty = ", ".join(str(w) for w in weights)
            print(f"  order {p} ({m + p} points): {pretty}")
        print()


if __name__ == "__main__":
    main()

"""Independent oracles shared by the test modules.

Nothing here touches the pentagonal expansion, the Miller power recurrence
or the sparse inverse; everything is schoolbook polynomial arithmetic.
"""

import pytest


def poly_mul(a, b, order):
    out = [0] * order
    for i, x in enumerate(a[:order]):
        if x:
            for j, y in enumerate(b[: order - i]):
                out[i + j] += x * y
    return out


def naive_product(factors, order):
    """prod over (c, e) of (1 + c q^e), truncated; factors with e >= order are skipped."""
    out = [1] + [0] * (order - 1)
    for c, e in factors:
        if e >= order:
            continue
        for n in range(order - 1, e - 1, -1):
            out[n] += c * out[n - e]
    return out


def naive_eta(j, order):
    return naive_product([(-1, j * n) for n in range(1, (order - 1) // j + 1)], order)


def naive_eta_quotient(pairs, order, q_shift=0):
    """prod f_j^e by repeated schoolbook products; inverses through the geometric series."""
    out = [1] + [0] * (order - 1)
    for j, e in pairs:
        if e > 0:
            for _ in range(e):
                out = poly_mul(out, naive_eta(j, order), order)
        else:
            # 1/f_j = prod 1/(1 - q^(jn)) = prod sum_k q^(jnk)
            for _ in range(-e):
                for n in range(1, (order - 1) // j + 1):
                    step = j * n
                    for m in range(step, order):
                        out[m] += out[m - step]
    return ([0] * q_shift + out)[:order]


@pytest.fixture(scope="session")
def pod2_2000():
    from pod2kit.partitions import pod2_dp

    return pod2_dp(2000)

import cmath
import math

import pytest

from powerhyper import (
    LinkSystem,
    PreconditionError,
    bezout_total,
    jacobian_nonsingular,
    nonzero_solution_count,
    origin_multiplicity,
    solve_link_variety,
    system_residual,
)


def test_system_validation():
    with pytest.raises(PreconditionError):
        LinkSystem(k=3, delta=1, mu=1)  # one variable only
    with pytest.raises(PreconditionError):
        LinkSystem(k=4, delta=1, mu=0)
    with pytest.raises(PreconditionError):
        LinkSystem(k=10, delta=0, mu=1)
    with pytest.raises(PreconditionError):
        LinkSystem(k=4, delta=2, mu=1)


def test_example_k4_delta1():
    rep = solve_link_variety(LinkSystem(k=4, delta=1, mu=1))
    assert rep.nonzero_total == 8
    assert rep.bezout == 9
    assert rep.origin_multiplicity == 1


def test_example_k3_delta0():
    rep = solve_link_variety(LinkSystem(k=3, delta=0, mu=1))
    assert rep.nonzero_total == 3
    assert rep.origin_multiplicity == 1
    assert rep.bezout == 4


def test_example_k4_delta0():
    rep = solve_link_variety(LinkSystem(k=4, delta=0, mu=1))
    assert rep.nonzero_total == 16
    assert rep.origin_multiplicity == 11
    assert rep.bezout == 27


def test_counts_match_closed_forms():
    for k in range(3, 8):
        for delta in (0, 1):
            if k - 1 - delta < 2:
                continue
            assert nonzero_solution_count(k, delta) == (
                k ** (k - 2) if delta == 0 else 2 * k ** (k - 3)
            )
            assert bezout_total(k, delta) == (k - 1) ** (k - 1 - delta)
            assert origin_multiplicity(k, delta) == bezout_total(k, delta) - nonzero_solution_count(k, delta)


def test_solutions_verified_and_distinct():
    for k, delta, mu in ((4, 1, 1), (4, 0, 2), (5, 1, 1 + 1j), (5, 0, 2)):
        sys_ = LinkSystem(k=k, delta=delta, mu=mu)
        rep = solve_link_variety(sys_)
        assert all(system_residual(sys_, p) <= 1e-12 for p in rep.nonzero_solutions)
        scale = abs(mu) ** -0.5 if delta == 1 else abs(mu) ** -1.0
        keys = set()
        for p in rep.nonzero_solutions:
            keys.add(tuple((round(z.real / scale, 6), round(z.imag / scale, 6)) for z in p))
        assert len(keys) == rep.nonzero_total
        # scaled minimum pairwise separation stays bounded away from zero
        sols = rep.nonzero_solutions
        if len(sols) <= 60:
            min_gap = min(
                max(abs(a - b) for a, b in zip(p, q))
                for i, p in enumerate(sols)
                for q in sols[i + 1 :]
            )
            assert min_gap / scale > 1e-6


def test_solution_magnitudes():
    # |p_i| is |mu|^(-1/2) for the two-sided family, |mu|^(-1) otherwise
    for mu in (2, 1 + 1j):
        rep1 = solve_link_variety(LinkSystem(k=5, delta=1, mu=mu))
        assert all(
            abs(abs(z) - abs(mu) ** -0.5) < 1e-12 for p in rep1.nonzero_solutions for z in p
        )
        rep0 = solve_link_variety(LinkSystem(k=5, delta=0, mu=mu))
        assert all(
            abs(abs(z) - abs(mu) ** -1.0) < 1e-12 for p in rep0.nonzero_solutions for z in p
        )


def test_root_of_unity_closure():
    # multiplying one coordinate by w and another by 1/w preserves the system
    k = 5
    sys_ = LinkSystem(k=k, delta=1, mu=1)
    rep = solve_link_variety(sys_)
    keys = {tuple((round(z.real, 6), round(z.imag, 6)) for z in p) for p in rep.nonzero_solutions}
    w = cmath.exp(2j * math.pi / k)
    for p in rep.nonzero_solutions[:10]:
        q = (p[0] * w, p[1] / w) + p[2:]
        assert system_residual(sys_, q) <= 1e-9
        assert tuple((round(z.real, 6), round(z.imag, 6)) for z in q) in keys


def test_jacobian_dominance():
    sys_ = LinkSystem(k=4, delta=1, mu=1)
    rep = solve_link_variety(sys_)
    assert all(jacobian_nonsingular(sys_, p) for p in rep.nonzero_solutions)
    sys5 = LinkSystem(k=5, delta=0, mu=2)
    rep5 = solve_link_variety(sys5)
    assert all(jacobian_nonsingular(sys5, p) for p in rep5.nonzero_solutions)


def test_jacobian_at_origin_fails():
    for k, delta in ((4, 1), (4, 0), (6, 1)):
        sys_ = LinkSystem(k=k, delta=delta, mu=1)
        assert not jacobian_nonsingular(sys_, (0,) * sys_.size)


def test_jacobian_rejects_non_solutions():
    sys_ = LinkSystem(k=4, delta=1, mu=1)
    with pytest.raises(PreconditionError):
        jacobian_nonsingular(sys_, (0.5, 0.5))

from __future__ import annotations

from fractions import Fraction

import pytest

from cycdet import (
    CyclicMatrix,
    FundamentalSolutionCert,
    GenConfig,
    KernelVectorCert,
    SccKind,
    SignCase,
    SolutionSign,
    TwoClosedComponentsCert,
    all_ones_matrix,
    analyze_closed_scc,
    det_exact,
    det_sign,
    generate,
    identity_matrix,
    m_matrix_witness,
    motzkin_row_locator,
    sign,
    solution_space,
    verify_sign_report,
)
from cycdet.linalg import mat_vec, transpose

F = Fraction


class TestAnalyzeClosedScc:
    def test_singleton_component(self, singular5):
        analysis = analyze_closed_scc(singular5, (4,))
        assert analysis.kind is SccKind.FUNDAMENTAL
        assert analysis.fundamental_solution == (0, 0, 0, F(1, 2), 0)
        assert analysis.sign is SolutionSign.NON_NEGATIVE

    def test_three_vertex_component(self, posdet5):
        analysis = analyze_closed_scc(posdet5, (2, 3, 4))
        assert analysis.fundamental_solution == (0, F(1, 2), F(1, 4), F(1, 4), 0)
        assert analysis.sign is SolutionSign.NON_NEGATIVE

    def test_all_ones_singleton(self):
        analysis = analyze_closed_scc(all_ones_matrix(3), (2,))
        assert analysis.fundamental_solution == (0, 1, 0)
        assert analysis.sign is SolutionSign.NON_NEGATIVE

    def test_null_component(self):
        zero2 = CyclicMatrix.from_rows([[0, 0], [0, 0]])
        analysis = analyze_closed_scc(zero2, (1,))
        assert analysis.kind is SccKind.NULL
        assert analysis.null_basis == ((F(1), F(0)),)
        # null vectors zero-extend into the kernel of the full transpose
        for v in analysis.null_basis:
            assert mat_vec(transpose(zero2), v) == (0, 0)

    def test_rejects_open_component(self, posdet5):
        with pytest.raises(ValueError):
            analyze_closed_scc(posdet5, (1, 5))  # open SCC

    def test_rejects_non_component(self, posdet5):
        with pytest.raises(ValueError):
            analyze_closed_scc(posdet5, (2, 3))  # strict subset of an SCC


class TestSolutionSpace:
    def test_identity(self):
        space = solution_space(identity_matrix(5), F(1))
        assert len(space.fundamental) == 1
        assert space.fundamental[0].fundamental_solution == (1,) * 5
        assert space.canonical_particular == (1,) * 5
        assert space.feasible

    def test_two_fundamental_components(self, singular5):
        space = solution_space(singular5, F(1))
        assert len(space.fundamental) == 2 and not space.null
        by_component = {x.component: x.fundamental_solution for x in space.fundamental}
        assert by_component[(3, 5)] == (0, 0, 1, 0, 1)
        assert by_component[(4,)] == (0, 0, 0, F(1, 2), 0)
        # components are ordered by smallest member, so x1 lives on {3,5}
        assert space.canonical_particular == (0, 0, 1, 0, 1)

    def test_lambda_zero_with_fundamentals(self):
        space = solution_space(all_ones_matrix(2), F(0))
        assert [x.fundamental_solution for x in space.fundamental] == [(1, 0), (0, 1)]
        assert space.canonical_particular == (0, 0)
        assert space.feasible

    def test_null_only_infeasible_for_nonzero_lambda(self):
        zero1 = CyclicMatrix.from_rows([[0]])
        space = solution_space(zero1, F(1))
        assert not space.feasible
        assert space.canonical_particular is None
        assert space.null and space.null[0].null_basis == ((1,),)
        # lambda = 0 flips it to feasible with the zero vector
        space0 = solution_space(zero1, F(0))
        assert space0.feasible and space0.canonical_particular == (0,)

    def test_canonical_particular_scales_with_lambda(self, posdet5):
        space = solution_space(posdet5, F(-2, 3))
        assert space.canonical_particular == (0, F(-1, 3), F(-1, 6), F(-1, 6), 0)
        assert mat_vec(transpose(posdet5), space.canonical_particular) == (F(-2, 3),) * 5


class TestDetSign:
    def test_positive_case(self, posdet5):
        report = det_sign(posdet5)
        assert report.sign == 1
        assert report.case is SignCase.ONE_CLOSED_POSITIVE
        assert isinstance(report.certificate, FundamentalSolutionCert)
        assert report.certificate.vector == (0, F(1, 2), F(1, 4), F(1, 4), 0)
        assert mat_vec(transpose(posdet5), report.certificate.vector) == (1,) * 5
        assert verify_sign_report(posdet5, report)

    def test_two_closed_case(self, singular5):
        report = det_sign(singular5)
        assert report.sign == 0
        assert report.case is SignCase.TWO_OR_MORE_CLOSED
        assert isinstance(report.certificate, TwoClosedComponentsCert)
        assert report.certificate.components == ((3, 5), (4,))
        assert verify_sign_report(singular5, report)

    def test_negative_case(self):
        a = CyclicMatrix.from_rows([[-1, -2], [-2, -1]])
        report = det_sign(a)
        assert report.sign == -1
        assert report.case is SignCase.ONE_CLOSED_NEGATIVE
        assert report.certificate.vector == (F(-1, 3), F(-1, 3))
        assert det_exact(a.inner) == -3
        assert verify_sign_report(a, report)

    def test_null_case(self):
        zero1 = CyclicMatrix.from_rows([[0]])
        report = det_sign(zero1)
        assert report.sign == 0
        assert report.case is SignCase.ONE_CLOSED_NULL
        assert isinstance(report.certificate, KernelVectorCert)
        assert verify_sign_report(zero1, report)

    def test_bigger_null_component(self):
        # one closed SCC {1,2} whose restricted system is unsolvable
        a = CyclicMatrix.from_rows([[1, -1], [-1, 1]])
        report = det_sign(a)
        assert report.case is SignCase.ONE_CLOSED_NULL
        assert report.sign == 0 == sign(det_exact(a.inner))
        assert verify_sign_report(a, report)

    def test_quick_oracle_sweep(self):
        for seed in range(400):
            a = generate(GenConfig(n=1 + seed % 5, entry_bound=4, seed=seed))
            report = det_sign(a)
            assert report.sign == sign(det_exact(a.inner))
            assert verify_sign_report(a, report)


class TestRationalEntries:
    """The integer generator never exercises fractional entries; these do."""

    @staticmethod
    def rational_member(rng, n: int) -> CyclicMatrix:
        rows = []
        for i in range(n):
            draws = sorted(
                (F(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(n)), reverse=True
            )
            row = [F(0)] * n
            for k, v in enumerate(draws):
                row[(i + k) % n] = v
            rows.append(row)
        return CyclicMatrix.from_rows(rows)

    def test_oracle_equivalence_on_fractional_matrices(self):
        from cycdet.generate import Splitmix64

        rng = Splitmix64(515)
        for trial in range(250):
            a = self.rational_member(rng, 1 + trial % 5)
            report = det_sign(a)
            assert report.sign == sign(det_exact(a.inner))
            assert verify_sign_report(a, report)

    def test_witness_and_locator_on_fractional_matrices(self):
        from cycdet import RowSumTag, row_sum_class
        from cycdet.generate import Splitmix64

        rng = Splitmix64(616)
        for trial in range(100):
            n = 2 + trial % 4
            a = self.rational_member(rng, n)
            m_matrix_witness(a)  # raises on any invariant failure
            if row_sum_class(a).tag is RowSumTag.ALL_POSITIVE:
                z = [F(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(n)]
                total = sum(z)
                if total >= 0:
                    z[0] -= total + 1
                r = motzkin_row_locator(a, tuple(z))
                assert mat_vec(a, z)[r - 1] < 0


class TestOneByOneMatrices:
    def test_full_pipeline_on_single_entry(self):
        from cycdet import (
            check_connected_condition,
            is_p_matrix_exact,
            reachability_sets,
        )

        for q in (F(3, 7), F(0), F(-2, 5)):
            a = CyclicMatrix.from_rows([[q]])
            report = det_sign(a)
            assert report.sign == sign(q)
            assert verify_sign_report(a, report)
            assert m_matrix_witness(a) is None
            sets = reachability_sets(a, 1)
            assert sets.by_step[0] == (1,) and sets.closure == (1,)
            assert check_connected_condition(a)
            pm = is_p_matrix_exact(a)
            assert pm.is_p_matrix == (q > 0)
            if q <= 0:
                assert pm.witness == (1,)


class TestRowSumShortcut:
    def test_positive_row_sums_force_nonnegative_fundamentals(self):
        from cycdet import RowSumMode

        for seed in range(200):
            a = generate(GenConfig(n=1 + seed % 6, entry_bound=4,
                                   row_sum=RowSumMode.FORCE_POSITIVE, seed=seed))
            space = solution_space(a, F(1))
            assert space.feasible
            assert not space.null
            assert all(f.sign is SolutionSign.NON_NEGATIVE for f in space.fundamental)

    def test_negative_row_sums_force_nonpositive_fundamentals(self):
        from cycdet import RowSumMode

        for seed in range(200):
            a = generate(GenConfig(n=1 + seed % 6, entry_bound=4,
                                   row_sum=RowSumMode.FORCE_NEGATIVE, seed=seed))
            space = solution_space(a, F(1))
            assert space.feasible
            assert not space.null
            assert all(f.sign is SolutionSign.NON_POSITIVE for f in space.fundamental)


class TestMSemipositivityWitness:
    def test_posdet_witness_frozen_values(self, posdet5):
        w = m_matrix_witness(posdet5)
        assert w is not None
        assert w.open_union == (1, 5)
        assert w.ordering == (1, 5)
        assert w.z == (F(3, 4), F(11, 16))
        assert all(0 < v < 1 for v in w.z)

    def test_singular_witness_frozen_values(self, singular5):
        w = m_matrix_witness(singular5)
        assert w is not None
        assert w.open_union == (1, 2)
        assert w.z == (F(1, 2), F(5, 8))

    def test_not_applicable_when_everything_closed(self):
        assert m_matrix_witness(identity_matrix(5)) is None
        assert m_matrix_witness(all_ones_matrix(3)) is None

    def test_witness_invariants_on_generated_instances(self):
        from cycdet import build_gap_graph, scc_partition

        seen = 0
        for seed in range(300):
            a = generate(GenConfig(n=2 + seed % 6, entry_bound=4, seed=seed))
            partition = scc_partition(build_gap_graph(a))
            w = m_matrix_witness(a)
            if not partition.open_union:
                assert w is None
                continue
            seen += 1
            assert w is not None
            d = w.open_union
            block = [[w.m_matrix.entry(i, j) for j in d] for i in d]
            assert all(block[i][i] > 0 for i in range(len(d)))
            assert all(
                block[i][j] <= 0 for i in range(len(d)) for j in range(len(d)) if i != j
            )
            assert all(0 < v < 1 for v in w.z)
            assert all(v > 0 for v in mat_vec(block, w.z))
            assert set(w.ordering) == set(d)
        assert seen > 10  # random draws only rarely leave vertices open


class TestMotzkinRowLocator:
    def test_identity_two(self):
        assert motzkin_row_locator(identity_matrix(2), (F(-1), F(0))) == 1

    def test_posdet_example(self, posdet5):
        z = (F(-1), F(0), F(0), F(0), F(0))
        r = motzkin_row_locator(posdet5, z)
        assert mat_vec(posdet5, z) == (-2, 0, -2, -2, -1)
        assert mat_vec(posdet5, z)[r - 1] < 0

    def test_all_negative_variant(self):
        a = CyclicMatrix.from_rows([[-1, -1], [-1, -1]])
        r = motzkin_row_locator(a, (F(-1), F(0)))
        assert r == 2
        assert mat_vec(a, (F(-1), F(0)))[r - 1] > 0

    def test_rejects_mixed_row_sums(self):
        mixed = CyclicMatrix.from_rows([[1, 1], [-1, -1]])
        with pytest.raises(ValueError):
            motzkin_row_locator(mixed, (F(-1), F(0)))

    def test_rejects_nonnegative_total(self, posdet5):
        with pytest.raises(ValueError):
            motzkin_row_locator(posdet5, (F(1), F(0), F(0), F(0), F(0)))

    def test_strict_sign_on_generated_pairs(self):
        from cycdet import RowSumMode
        from cycdet.generate import Splitmix64

        for seed in range(200):
            n = 2 + seed % 5
            a = generate(GenConfig(n=n, entry_bound=5, row_sum=RowSumMode.FORCE_POSITIVE, seed=seed))
            rng = Splitmix64(seed, stream=9)
            z = [F(rng.randint(-5, 5)) for _ in range(n)]
            total = sum(z)
            if total >= 0:
                z[rng.randint(0, n - 1)] -= total + 1
            r = motzkin_row_locator(a, tuple(z))
            assert mat_vec(a, z)[r - 1] < 0

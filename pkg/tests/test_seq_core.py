import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kreinorbit.errors import DuplicateIndex, NonRealC0, ParseError, SymmetryViolation
from kreinorbit.seq_core import (
    BiSequence,
    MomentSequence,
    hermitian_extend,
    load_moments,
    moments_from_json,
    moments_to_json,
    toeplitz_matrix,
    validate_moments,
)

complexes = st.complex_numbers(max_magnitude=1e3, allow_nan=False, allow_infinity=False)


def test_zero_entries_dropped():
    s = BiSequence({0: 1, 3: 0, -2: 2j})
    assert s.support == (-2, 0)
    assert s[3] == 0
    assert s[100] == 0
    assert s == BiSequence([(-2, 2j), (0, 1)])


def test_duplicate_pairs_rejected():
    with pytest.raises(DuplicateIndex):
        BiSequence([(1, 1.0), (1, 2.0)])


def test_arithmetic_and_reindexing():
    a = BiSequence({0: 1, 1: 2})
    b = BiSequence({1: -2, 2: 1j})
    assert a + b == BiSequence({0: 1, 2: 1j})
    assert (a - a) == BiSequence()
    assert a.shifted(3) == BiSequence({3: 1, 4: 2})
    assert a.reflect() == BiSequence({0: 1, -1: 2})
    assert (2j * a)[1] == 4j
    np.testing.assert_array_equal(a.to_array(-1, 2), [0, 1, 2, 0])


def test_hermitian_extend_single_point():
    c = hermitian_extend([(0, 1)])
    assert c[0] == 1 and c.c.support == (0,)


def test_hermitian_extend_conjugate_reflection():
    c = hermitian_extend([(0, 1), (1, 1j)])
    assert c[1] == 1j and c[-1] == -1j


def test_hermitian_extend_window():
    c = hermitian_extend([(0, 2), (3, 1 + 1j)])
    assert c[-3] == 1 - 1j
    assert c.window == 3


def test_hermitian_extend_errors():
    with pytest.raises(DuplicateIndex):
        hermitian_extend([(0, 1), (0, 2)])
    with pytest.raises(NonRealC0):
        hermitian_extend([(0, 1 + 1e-6j)])
    # ingestion noise below the tolerance is absorbed and c(0) made exactly real
    c = hermitian_extend([(0, 1 + 1e-14j)])
    assert c[0].imag == 0.0


@given(st.lists(complexes, min_size=1, max_size=10), st.floats(-10, 10))
def test_extend_then_restrict_is_identity(vals, c0):
    half = [(0, complex(c0))] + [(N, v) for N, v in enumerate(vals, start=1)]
    c = hermitian_extend(half)
    assert hermitian_extend(c.nonnegative_half()) == c
    for N, v in half:
        assert c[N] == v and c[-N] == complex(v).conjugate()


@settings(max_examples=50)
@given(st.lists(complexes, min_size=0, max_size=6), st.floats(-5, 5), st.integers(0, 8))
def test_toeplitz_window_is_hermitian(vals, c0, W):
    c = hermitian_extend([(0, c0)] + [(N, v) for N, v in enumerate(vals, start=1)])
    T = toeplitz_matrix(c, W)
    # entrywise, exact
    assert np.array_equal(T, T.conj().T)
    if W:
        assert T[W, W + 1] == c[1]


def test_validate_delta():
    est = validate_moments(hermitian_extend([(0, 1)]))
    assert est.a_hat == 0 and est.M_hat == 1


def test_validate_powers_of_two():
    # oracle: max_N log(2^N)/N over N = 1..4 is ln 2 for every N
    slopes = [math.log(2.0**N) / N for N in range(1, 5)]
    c = hermitian_extend([(N, 2.0**N) for N in range(5)])
    est = validate_moments(c)
    assert est.M_hat == 1
    assert est.a_hat == pytest.approx(max(slopes), rel=1e-15)
    assert est.a_hat == pytest.approx(math.log(2), rel=1e-15)


def test_validate_flat():
    est = validate_moments(hermitian_extend([(N, 1.0) for N in range(9)]))
    assert est.a_hat == 0 and est.M_hat == 1


@given(st.lists(complexes, min_size=1, max_size=12), st.floats(-50, 50))
def test_growth_bound_holds_exactly(vals, c0):
    c = hermitian_extend([(0, c0)] + [(N, v) for N, v in enumerate(vals, start=1)])
    est = validate_moments(c)
    for N, v in c.c.items():
        assert abs(v) <= est.M_hat * math.exp(est.a_hat * abs(N))
    assert est.M_hat == max(1.0, abs(c0))
    # least slope: shrinking it breaks the bound somewhere (unless it is already 0)
    if est.a_hat > 1e-12:
        a = est.a_hat * (1 - 1e-9)
        assert any(abs(v) > est.M_hat * math.exp(a * abs(N)) for N, v in c.c.items())


def test_symmetry_violation_reports_index():
    bad = MomentSequence(BiSequence({0: 1, 2: 1, -2: 5}), window=2)
    with pytest.raises(SymmetryViolation) as info:
        validate_moments(bad)
    assert info.value.index == 2


def test_json_roundtrip(tmp_path):
    c = hermitian_extend([(0, 1.5), (1, 2 - 1j), (2, 0.25j)])
    p = tmp_path / "m.json"
    p.write_text(json.dumps(moments_to_json(c)))
    assert load_moments(p) == c


@pytest.mark.parametrize(
    "obj",
    [
        {"moments": [{"n": -1, "re": 1.0, "im": 0.0}]},
        {"moments": [{"n": 0, "re": 1.0}, {"n": 0, "re": 2.0}]},
        {"moments": [{"n": 1.5, "re": 1.0}]},
        {"moments": [{"re": 1.0}]},
        {"moment": []},
        [1, 2],
    ],
)
def test_json_rejects(obj):
    with pytest.raises(ParseError):
        moments_from_json(obj)


def test_json_unreadable(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    with pytest.raises(ParseError):
        load_moments(p)

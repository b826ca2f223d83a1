"""Digit-omission counting: fast path vs naive oracle, reports, gap checks."""

import json
import math
import random
from decimal import Decimal, localcontext

import pytest

from betadix import (
    CountRequest,
    HypothesisViolated,
    NormTooSmall,
    NotCoprime,
    NumberRing,
    OutOfDomain,
    RootOfUnity,
    count_omitting,
    count_omitting_naive,
    digit_set_canonical,
    naive_digit_presence,
    narkiewicz_check,
    rational_digit_presence,
    sigma,
    sigma_of_norm,
    verify_gap_lemma,
)


Z = NumberRing((0, 1))
GAUSS = NumberRing((1, 0, 1))


def _request(alpha=2, beta=3, b=2, N=100, **kw):
    dset = digit_set_canonical(Z, Z.element(beta))
    return CountRequest(Z, alpha, beta, dset, b, N, **kw)


# ---------------------------------------------------------------------------
# sigma
# ---------------------------------------------------------------------------

def test_sigma_three_frozen():
    s = sigma_of_norm(3)
    assert s.text == "0.630929753571457437099527114343"
    assert s.to_dict() == {
        "log_of": 2,
        "log_base": 3,
        "decimal": "0.630929753571457437099527114343",
    }


def test_sigma_two_is_zero():
    assert sigma_of_norm(2).text == "0"


def test_sigma_agrees_with_float_log():
    for m in (3, 4, 5, 10, 37):
        want = math.log(m - 1) / math.log(m)
        assert abs(float(sigma_of_norm(m).decimal()) - want) < 1e-12


def test_sigma_stable_under_higher_precision():
    # recompute at a much higher working precision, then round to 30 digits
    with localcontext() as ctx:
        ctx.prec = 80
        hi = Decimal(4).ln() / Decimal(5).ln()
    with localcontext() as ctx:
        ctx.prec = 30
        rounded = +hi
    assert str(rounded) == sigma_of_norm(5).text


def test_sigma_of_element():
    s = sigma(GAUSS, GAUSS.parse("-1+2i"))  # norm 5
    assert s.to_dict()["log_of"] == 4
    assert s.text.startswith("0.861353")


def test_sigma_rejects_units():
    for m in (1, 0, -1):
        with pytest.raises(NormTooSmall):
            sigma_of_norm(m)


# ---------------------------------------------------------------------------
# requests
# ---------------------------------------------------------------------------

def test_request_mode_validation():
    assert _request(mode="radix").mode == "radix-only"
    with pytest.raises(ValueError):
        _request(mode="stream")


def test_request_fingerprint_distinguishes():
    a, b = _request(N=100), _request(N=100)
    assert a.fingerprint() == b.fingerprint()
    assert a.fingerprint() != _request(N=101).fingerprint()
    assert a.fingerprint() != _request(b=1).fingerprint()


def test_request_coerces_plain_ints():
    r = _request()
    assert r.alpha.coeffs == (2,) and r.beta.coeffs == (3,)


# ---------------------------------------------------------------------------
# the count itself
# ---------------------------------------------------------------------------

def test_exceptional_exponents_small():
    rep = count_omitting(_request(N=100))
    assert rep.hits == (2, 8)
    assert rep.count == 2
    assert rep.counts == ((3, 1), (9, 2), (27, 2), (81, 2), (100, 2))


def test_ratio_rows_are_30_digit_strings():
    rep = count_omitting(_request(N=100))
    ratios = {n: r for (n, _), r in zip(rep.counts, rep.ratios)}
    # 3^sigma = 2 exactly, so M/N^sigma at N=3, M=1 is exactly one half
    assert ratios[3] == "0.500000000000000000000000000000"
    assert ratios[9] == "0.500000000000000000000000000000"
    assert ratios[27] == "0.250000000000000000000000000000"


def test_omitting_zero_digit():
    rep = count_omitting(_request(b=0, N=50))
    assert rep.hits == (1, 2, 3, 4, 15)
    assert rep.hits == tuple(
        n for n in range(1, 51) if "0" not in _ternary(2**n)
    )


def _ternary(n):
    out = ""
    while n:
        out = str(n % 3) + out
        n //= 3
    return out or "0"


def test_fast_equals_naive_presence():
    for p, q in ((2, 3), (3, 2), (7, 10), (2, 9), (5, 6)):
        assert rational_digit_presence(p, q, 150) == naive_digit_presence(p, q, 150)


def test_count_equals_naive_count():
    for b in range(3):
        rep = count_omitting(_request(b=b, N=120))
        assert rep.hits == tuple(count_omitting_naive(2, 3, b, 120))


def test_hits_strictly_increasing_counts_monotone():
    rep = count_omitting(_request(b=1, N=400))
    assert all(a < b for a, b in zip(rep.hits, rep.hits[1:]))
    ms = [m for _, m in rep.counts]
    assert ms == sorted(ms)
    assert rep.counts[-1][0] == 400


def test_checkpoint_cutoffs_are_norm_powers():
    rep = count_omitting(_request(N=100))
    assert [n for n, _ in rep.counts] == [3, 9, 27, 81, 100]


def test_single_row_zero_count():
    rep = count_omitting(_request(N=1))
    assert rep.counts == ((1, 0),)
    assert rep.ratios == ("0",)
    assert rep.hits == ()


def test_parallel_matches_sequential():
    seq = count_omitting(_request(N=300))
    par = count_omitting(_request(N=300), jobs=3)
    assert seq.hits == par.hits and seq.counts == par.counts


def test_checkpoint_resume(tmp_path):
    cp = tmp_path / "count.json"
    full = count_omitting(_request(N=200), checkpoint_path=str(cp))
    data = json.loads(cp.read_text())
    data["next_n"] = 30
    data["hits"] = [h for h in full.hits if h < 30]
    cp.write_text(json.dumps(data))
    resumed = count_omitting(_request(N=200), checkpoint_path=str(cp))
    assert resumed.hits == full.hits


def test_checkpoint_rejected_for_other_request(tmp_path):
    cp = tmp_path / "count.json"
    count_omitting(_request(N=150), checkpoint_path=str(cp))
    other = count_omitting(_request(b=1, N=150), checkpoint_path=str(cp))
    assert other.hits == tuple(count_omitting_naive(2, 3, 1, 150))


def test_parallel_ignores_checkpoint_with_note(tmp_path):
    cp = tmp_path / "count.json"
    rep = count_omitting(_request(N=120), jobs=2, checkpoint_path=str(cp))
    assert any("checkpoint" in note for note in rep.notes)


def test_general_path_gaussian_base():
    # beta-adic scan over a non-rational base, exploration mode
    dset = digit_set_canonical(GAUSS, GAUSS.parse("-1+i"))
    req = CountRequest(
        GAUSS, GAUSS.element(3), GAUSS.parse("-1+i"), dset, 1, 40,
        mode="beta-adic", strict=False,
    )
    rep = count_omitting(req)
    assert any("outside the degree-one" in n for n in rep.notes)
    # oracle: expand 3^n directly and scan
    from betadix import ResidueTable, beta_expansion, omits_digit

    table = ResidueTable(GAUSS, GAUSS.parse("-1+i"), dset)
    want = tuple(
        n
        for n in range(1, 41)
        if omits_digit(beta_expansion(GAUSS.element(3) ** n, table), 1)
    )
    assert rep.hits == want


def test_negative_base_counts():
    dset = digit_set_canonical(Z, Z.element(-3))
    req = CountRequest(Z, 2, -3, dset, 2, 60)
    rep = count_omitting(req)
    assert rep.hits == (6,)


def test_root_of_unity_rejected():
    for alpha in (1, -1):
        with pytest.raises(RootOfUnity):
            count_omitting(_request(alpha=alpha, N=10))
    dset = digit_set_canonical(GAUSS, GAUSS.parse("2+i"))
    with pytest.raises(RootOfUnity):
        count_omitting(
            CountRequest(GAUSS, GAUSS.parse("i"), GAUSS.parse("2+i"), dset, 0, 10)
        )


def test_zero_alpha_rejected():
    with pytest.raises(OutOfDomain):
        count_omitting(_request(alpha=0, N=10))


def test_noncoprime_alpha_rejected():
    with pytest.raises(NotCoprime):
        count_omitting(_request(alpha=6, N=10))


def test_report_serialization_is_byte_stable():
    a = count_omitting(_request(N=200)).to_dict()
    b = count_omitting(_request(N=200)).to_dict()
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    assert "elapsed" not in json.dumps(a)


def test_report_csv_shape():
    rep = count_omitting(_request(N=100))
    lines = rep.to_csv().strip().splitlines()
    assert lines[0] == "N,M,ratio,checkpoint"
    assert lines[1].startswith("3,1,0.5")
    assert lines[-1].startswith("100,2,")
    assert rep.hits_text().splitlines() == ["2", "8"]


def test_hits_partition_by_exponent_class():
    rep = count_omitting(_request(N=6561))
    by_class = {l: [n for n in rep.hits if n % 6 == l] for l in range(6)}
    merged = sorted(n for part in by_class.values() for n in part)
    assert tuple(merged) == rep.hits


# ---------------------------------------------------------------------------
# ratio bound scan
# ---------------------------------------------------------------------------

def test_narkiewicz_small():
    rep = narkiewicz_check(500)
    assert rep.ok
    assert rep.bound == "1.62"
    assert rep.max_ratio == "0.645760117165097603272904230871"
    assert rep.argmax == 2
    assert all(Decimal(row[2]) < Decimal("1.62") for row in rep.table)


def test_narkiewicz_report_dict():
    d = narkiewicz_check(100).to_dict()
    assert d["ok"] is True
    assert d["N"] == 100


# ---------------------------------------------------------------------------
# exponent-gap law
# ---------------------------------------------------------------------------

def test_gap_exhaustive_frozen():
    a = Z.element(2)
    r1 = verify_gap_lemma(a, 3, k=1, nmax=60)
    assert (r1.u, r1.n0, r1.c0_tilde, r1.c0) == (6, 2, 9, 54)
    assert (r1.gap_modulus, r1.window, r1.max_class_size) == (1, 3, 3)
    assert r1.checked == 10620 and r1.matched == 10620
    assert r1.violations == 0

    r2 = verify_gap_lemma(a, 3, k=2, nmax=60)
    assert (r2.gap_modulus, r2.window, r2.max_class_size) == (1, 9, 9)
    assert r2.matched == r2.checked

    r3 = verify_gap_lemma(a, 3, k=3, nmax=60)
    assert (r3.gap_modulus, r3.window, r3.max_class_size) == (3, 27, 9)
    assert r3.matched == 3420 and r3.violations == 0
    assert r3.max_class_size <= r3.class_size_bound <= r3.c0_tilde


def test_gap_k_zero_vacuous():
    rep = verify_gap_lemma(Z.element(2), 3, k=0, nmax=20)
    assert rep.window is None
    assert rep.violations == 0
    assert rep.matched == rep.checked


def test_gap_sampled_pairs():
    sample = [(1, 7), (2, 20), (5, 5), (3, 30), (7, 100)]
    rep = verify_gap_lemma(Z.element(2), 3, k=2, sample=sample)
    assert rep.violations == 0
    assert rep.checked == 4 * 6  # (5,5) dropped, 6 shifts l each


def test_gap_five_base_three():
    # same machinery on (alpha, beta) = (5, 3): order of 5 mod 9 is 6
    rep = verify_gap_lemma(Z.element(5), 3, k=1, nmax=40)
    assert rep.violations == 0
    assert rep.u == 6


def test_gap_requires_sample_or_nmax():
    with pytest.raises(ValueError):
        verify_gap_lemma(Z.element(2), 3, k=1)

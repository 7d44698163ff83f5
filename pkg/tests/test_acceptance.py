"""Acceptance gate: every exit criterion, one test each, exact tolerances.

Each test prints its own pass/fail line so `pytest -s tests/test_acceptance.py`
shows the acceptance matrix; `python -m signedkl sweep` renders the same
criteria through the CLI.
"""

import pytest

from signedkl import acceptance


def _run(fn):
    result = fn()
    status = "PASS" if result.passed else "FAIL"
    print(f"[{status}] criterion {result.number}: {result.name} "
          f"({result.details}; {result.elapsed:.2f}s)")
    assert result.passed, f"criterion {result.number}: {result.details}"
    return result


def test_criterion_1_main_identity_exhaustive():
    result = _run(acceptance.criterion_1)
    # six systems, all-compact + each single + all-noncompact gradings
    assert result.elapsed < 60.0


def test_criterion_2_g2_table():
    result = _run(acceptance.criterion_2)
    assert result.elapsed < 1.0


def test_criterion_3_lemma_suite():
    result = _run(acceptance.criterion_3)
    assert result.elapsed < 10.0


def test_criterion_4_classical_kl_cross_method():
    result = _run(acceptance.criterion_4)
    assert result.elapsed < 30.0


def test_criterion_5_rank1_signature_characters():
    result = _run(acceptance.criterion_5)
    assert result.elapsed < 1.0


def test_criterion_6_alcove_sum_vs_crossings():
    result = _run(acceptance.criterion_6)
    assert result.elapsed < 10.0


def test_criterion_7_jantzen_bookkeeping():
    result = _run(acceptance.criterion_7)
    assert result.elapsed < 1.0


def test_criterion_8_determinism():
    _run(acceptance.criterion_8)


def test_sweep_runner_aggregates():
    results = acceptance.run_all()
    assert [r.number for r in results] == list(range(1, 9))
    assert all(r.passed for r in results)
    rendered = acceptance.render(results)
    assert rendered.count("[PASS]") == 8

"""Exit criteria; each prints one PASS/FAIL line (visible with ``pytest -s`` or in the summary)."""

import pytest

from matconic.acceptance import CRITERIA


@pytest.mark.parametrize("k", sorted(CRITERIA), ids=[f"criterion_{k}" for k in sorted(CRITERIA)])
def test_criterion(k, capsys, record_property):
    name, fn = CRITERIA[k]
    ok, detail = fn()
    line = f"{'PASS' if ok else 'FAIL'} criterion {k}: {name} -- {detail}"
    record_property("acceptance", line)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line

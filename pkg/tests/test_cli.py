import pytest

from distinguo import distinguish, ex41, orbit_equiv, streams
from distinguo.cli import build_parser, run
from distinguo.perm import parse_group

from cli_cases import CASES, fx, invoke

SUBCOMMANDS = {
    "motion", "certify", "distinguish", "subset2", "base", "autgroup", "greedy", "displace",
    "closure-probe", "stab-orbits", "orbits", "strong-oe", "oe-witness", "dense-sample",
    "gl-construct", "gl-verify", "count-preserved",
}


def _run(capsys, *args):
    code = run(list(args))
    out = capsys.readouterr().out
    return code, out.splitlines()


def _load(name):
    with open(fx(name)) as f:
        return parse_group(f.read())


@pytest.mark.parametrize("args, code, last", CASES, ids=[" ".join(c[0][:1] + c[0][-1:]) for c in CASES])
def test_cli_case(capsys, args, code, last):
    got, lines = _run(capsys, *args)
    assert got == code
    assert lines
    if last is not None:
        assert lines[-1] == last
    if code == 0:
        assert lines[-1].startswith(("result:", "verdict:"))
        assert sum(l.startswith(("result:", "verdict:")) for l in lines) == 1
    else:
        assert lines == [lines[-1]] and lines[-1].startswith("error: ")


def test_every_subcommand_is_exposed():
    sub = next(a for a in build_parser()._actions if a.dest == "command")
    assert set(sub.choices) == SUBCOMMANDS
    assert SUBCOMMANDS <= {c[0][0] for c in CASES}


def test_greedy_report_lines(capsys):
    _, lines = _run(capsys, "greedy", "--family", "z-translate", "--n", "3")
    assert lines[:3] == ["1 0 1", "2 -1 -2", "3 2 4"]


def test_quiet_prints_only_last_line(capsys):
    _, full = _run(capsys, "certify", fx("c11.grp"))
    _, quiet = _run(capsys, "certify", fx("c11.grp"), "--quiet")
    assert quiet == full[-1:]


def test_motion_report_matches_library(capsys):
    rep = distinguish.motion(_load("d6.grp"))
    _, lines = _run(capsys, "motion", fx("d6.grp"))
    assert lines == [f"order: {rep.group_order}", f"witness: {rep.witness.cycle_string()}", f"result: m={rep.motion}"]


def test_distinguish_report_matches_library(capsys):
    d, w = distinguish.distinguishing_number(_load("d6.grp"))
    _, lines = _run(capsys, "distinguish", fx("d6.grp"))
    assert lines == [f"witness: {w}", f"result: D={d}"]


def test_orbits_report_matches_library(capsys):
    part = orbit_equiv.powerset_orbits(_load("c6.grp"))
    _, lines = _run(capsys, "orbits", fx("c6.grp"))
    assert lines[:-1] == part.format().splitlines()
    assert lines[-1] == f"result: {len(part.classes)} classes"


def test_displace_report_matches_library(capsys):
    s = streams.make_stream("ex41-B")
    a = streams.find_displacing_element(s, [(0, 0), (1, 0)], [(0, 0)], 1000)
    _, lines = _run(capsys, "displace", "--family", "ex41-B", "--Y", "x0,y0", "--Z", "x0")
    assert lines == [f"index: {a.index}", f"result: {a.word_string()}"]


def test_closure_probe_report_matches_library(capsys):
    s = streams.make_stream("ex41-B")
    rep = streams.closure_membership_probe(s, ex41.S0, [2, 4], 10000)
    _, lines = _run(capsys, "closure-probe", "--family", "ex41-B", "--target", "s0", "--radii", "2,4", "--budget", "10000")
    for r, line in zip(rep.results, lines):
        assert line == f"radius {r.radius}: index {r.witness.index} word {r.witness.word_string()}"


def test_stab_orbits_report(capsys):
    _, lines = _run(capsys, "stab-orbits", "--family", "ex41-A", "--point", "x0", "--radius", "1", "--budget", "2000")
    assert lines[:3] == ["orbit: {x0}", "orbit: {y0}", "orbit: {x1,y1,x-1,y-1}"]


def test_dense_sample_report_matches_library(capsys):
    out = orbit_equiv.sample_dense_generators(streams.make_stream("z-translate"), 2, 1, 100)
    _, lines = _run(capsys, "dense-sample", "--family", "z-translate", "--radius", "2", "--size", "1", "--budget", "100")
    assert lines[-1] == f"result: {len(out.representatives)} representatives"
    assert f"pairs: {len(out.pairs)}" in lines


def test_gl_reports(capsys):
    _, lines = _run(capsys, "gl-construct", "--dim", "2", "--scalar", "2")
    assert lines[:3] == ["1/1 0/1", "0/1 1/1", "0/1 2/1"]
    _, lines = _run(capsys, "gl-verify", fx("swap.vec"))
    assert lines[2:4] == ["certificate: 0/1 1/1", "certificate: 1/1 0/1"]


def test_error_message_goes_to_stderr(capsys):
    assert run(["gl-construct", "--dim", "2", "--scalar", "-1"]) == 1
    captured = capsys.readouterr()
    assert captured.out == "error: OrderTooSmall\n"
    assert captured.err.strip()


def test_usage_errors_exit_1(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["greedy", "--family", "z-translate"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        run(["nonsense"])
    assert exc.value.code == 1


def test_subprocess_entry_point():
    code, out = invoke(["certify", fx("c11.grp"), "--quiet"])
    assert code == 0 and out == b"verdict: CERTIFIED_2 m=11 order=11\n"

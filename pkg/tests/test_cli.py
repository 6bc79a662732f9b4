import csv
import io
import json

from nicom.cli import EXIT_GUARD, EXIT_OK, EXIT_USAGE, canonical_json, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_brute(capsys):
    code, out, _ = run(capsys, "compute", "--sum", "A", "--k", "5", "--s", "1",
                       "--engine", "brute")
    assert code == EXIT_OK
    assert out.strip() == "14"


def test_compute_closed_aprime(capsys):
    code, out, _ = run(capsys, "compute", "--sum", "Aprime", "--k", "4", "--s", "3",
                       "--engine", "closed")
    assert code == EXIT_OK
    assert out.strip() == "133"


def test_compute_rec_empty_sum(capsys):
    code, out, _ = run(capsys, "compute", "--sum", "A", "--k", "2", "--s", "3",
                       "--engine", "rec")
    assert code == EXIT_OK
    assert out.strip() == "0"


def test_compute_json_uses_decimal_strings(capsys):
    code, out, _ = run(capsys, "compute", "--sum", "A", "--k", "100", "--s", "3",
                       "--engine", "rec", "--format", "json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert isinstance(payload["value"], str)
    assert payload["value"].isdigit()


def test_compute_usage_errors(capsys):
    code, _, err = run(capsys, "compute", "--sum", "A", "--k", "5", "--s", "2",
                       "--engine", "closed")
    assert code == EXIT_USAGE
    assert "closed engine" in err
    code, _, _ = run(capsys, "compute", "--sum", "A", "--k", "5")
    assert code == EXIT_USAGE  # missing --s


def test_compute_guard_exit(capsys):
    code, _, err = run(capsys, "compute", "--sum", "A", "--k", "40", "--s", "1",
                       "--engine", "brute")
    assert code == EXIT_GUARD
    assert "guard" in err


def test_verify_pass_and_fail_exit_codes(capsys):
    code, _, _ = run(capsys, "verify", "--claim", "nicomachus", "--kmax", "100")
    assert code == EXIT_OK


def test_verify_json_round_trip(capsys):
    code, out, _ = run(capsys, "verify", "--claim", "theorem1", "--kmax", "30",
                       "--format", "json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["verdict"] == "pass"
    assert payload["claim"] == "theorem1"
    assert payload["range"] == [3, 30]
    assert canonical_json(payload) == out.strip()


def test_verify_csv_rows(capsys):
    code, out, _ = run(capsys, "verify", "--claim", "lemma3", "--kmax", "12",
                       "--engines", "brute,closed", "--format", "csv")
    assert code == EXIT_OK
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["claim", "k", "lhs", "rhs", "equal"]
    assert all(r[4] == "true" for r in rows[1:])


def test_verify_deep(capsys):
    code, out, _ = run(capsys, "verify", "--claim", "case4l", "--deep",
                       "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out)["range"] == [1, 100]


def test_prove_text(capsys):
    code, out, _ = run(capsys, "prove", "--claim", "lemma2")
    assert code == EXIT_OK
    assert out.count("certified") == 2


def test_prove_theorem1_emits_four_certificates(capsys):
    code, out, _ = run(capsys, "prove", "--claim", "theorem1", "--format", "json")
    assert code == EXIT_OK
    certs = json.loads(out)
    assert len(certs) == 4
    assert all(c["verdict"] == "certified" for c in certs)


def test_prove_custom_window(capsys):
    code, out, _ = run(capsys, "prove", "--claim", "lemma4", "--window", "30",
                       "--format", "json")
    assert code == EXIT_OK
    assert all(c["window"] == 30 for c in json.loads(out))


def test_bench_closed_far_beyond_brute(capsys):
    code, out, _ = run(capsys, "bench", "--k", "1000", "--s", "3",
                       "--engine", "closed")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["digits"] > 800
    assert payload["seconds"] < 1.0


def test_bench_rec_and_closed_agree_with_brute_in_range(capsys):
    _, out_rec, _ = run(capsys, "compute", "--sum", "A", "--k", "25", "--s", "3",
                        "--engine", "rec")
    _, out_closed, _ = run(capsys, "compute", "--sum", "A", "--k", "25", "--s", "3",
                           "--engine", "closed")
    _, out_brute, _ = run(capsys, "compute", "--sum", "A", "--k", "25", "--s", "3",
                          "--engine", "brute")
    assert out_rec == out_closed == out_brute


def test_bench_brute_beyond_guard(capsys):
    code, _, _ = run(capsys, "bench", "--k", "100", "--s", "1", "--engine", "brute")
    assert code == EXIT_GUARD


def test_unknown_subcommand(capsys):
    assert run(capsys, "frobnicate")[0] == EXIT_USAGE

"""Checkpoint ledger: persistence, resume, recovery and refusal paths."""

import json
import random

import pytest

from league_ties import engine
from league_ties.engine import CheckpointLedger, KNOWN_TOTALS, count_tied, resume
from league_ties.errors import CheckpointError


def run_with_ledger(tmp_path, n, **kwargs):
    path = tmp_path / f"run_n{n}.ledger"
    report = count_tied(n, checkpoint=path, **kwargs)
    return path, report


def ledger_lines(path):
    return path.read_text().splitlines()


def truncate_entries(path, keep):
    """Rewrite the ledger with only the first ``keep`` entry lines."""
    lines = ledger_lines(path)
    path.write_text("\n".join(lines[: 1 + keep]) + "\n")


class TestLedgerFile:
    def test_header_plus_one_entry_per_profile(self, tmp_path):
        path, report = run_with_ledger(tmp_path, 4)
        lines = ledger_lines(path)
        header = json.loads(lines[0])
        assert header["kind"] == "header"
        assert header["n"] == 4
        assert len(lines) - 1 == report.searched_profiles

    def test_entries_carry_exact_decimal_counts(self, tmp_path):
        path, _ = run_with_ledger(tmp_path, 4)
        total = 0
        for line in ledger_lines(path)[1:]:
            record = json.loads(line)
            assert record["kind"] == "entry"
            assert isinstance(record["completions"], str)
            total += (
                record["representation"]
                * record["doubling"]
                * int(record["completions"])
            )
        assert total == KNOWN_TOTALS[4] - 1 - 152

    def test_fresh_run_is_not_marked_resumed(self, tmp_path):
        _, report = run_with_ledger(tmp_path, 4)
        assert report.resumed_from is None


class TestResume:
    def test_interrupted_run_resumes_to_identical_total(self, tmp_path):
        path, full = run_with_ledger(tmp_path, 5)
        truncate_entries(path, full.searched_profiles // 2)
        resumed = count_tied(5, checkpoint=path)
        assert resumed.total == full.total == KNOWN_TOTALS[5]
        assert resumed.resumed_from == str(path)
        assert len(ledger_lines(path)) - 1 == full.searched_profiles

    def test_resume_reads_options_from_header(self, tmp_path):
        path, full = run_with_ledger(tmp_path, 4)
        truncate_entries(path, 2)
        report = resume(path)
        assert report.n == 4
        assert report.total == full.total

    def test_complete_ledger_resumes_without_work(self, tmp_path):
        path, full = run_with_ledger(tmp_path, 4)
        before = path.read_text()
        again = resume(path)
        assert again.total == full.total
        assert path.read_text() == before  # nothing recomputed or rewritten

    def test_entry_order_is_irrelevant(self, tmp_path):
        path, full = run_with_ledger(tmp_path, 5)
        lines = ledger_lines(path)
        entries = lines[1:]
        random.Random(7).shuffle(entries)
        path.write_text("\n".join([lines[0]] + entries) + "\n")
        assert resume(path).total == full.total

    def test_resume_with_workers(self, tmp_path):
        path, full = run_with_ledger(tmp_path, 5)
        truncate_entries(path, 3)
        assert count_tied(5, checkpoint=path, workers=2).total == full.total


class TestRefusals:
    def test_wrong_league_size(self, tmp_path):
        path, _ = run_with_ledger(tmp_path, 4)
        with pytest.raises(CheckpointError, match="does not match"):
            count_tied(5, checkpoint=path)

    def test_wrong_options_digest(self, tmp_path):
        path, _ = run_with_ledger(tmp_path, 4, strict=True)
        with pytest.raises(CheckpointError, match="does not match"):
            count_tied(4, checkpoint=path)

    def test_unwritable_path(self, tmp_path):
        missing_dir = tmp_path / "no" / "such" / "dir" / "x.ledger"
        with pytest.raises(CheckpointError, match="cannot write"):
            count_tied(4, checkpoint=missing_dir)

    def test_not_a_ledger(self, tmp_path):
        path = tmp_path / "junk.ledger"
        path.write_text("hello world\n")
        with pytest.raises(CheckpointError, match="header"):
            count_tied(4, checkpoint=path)

    def test_foreign_profile_refused(self, tmp_path):
        path, _ = run_with_ledger(tmp_path, 4)
        lines = ledger_lines(path)
        record = json.loads(lines[1])
        # A self-consistent record for a profile that is not SEARCH class.
        record.update(takes=[2, 2, 2], completions="1", representation=1, doubling=1)
        lines.append(json.dumps(record))
        path.write_text("\n".join(lines) + "\n")
        with pytest.raises(CheckpointError, match="outside the SEARCH class"):
            count_tied(4, checkpoint=path)


class TestRecovery:
    def test_corrupt_trailing_entry_is_dropped_with_warning(self, tmp_path):
        path, full = run_with_ledger(tmp_path, 5)
        with open(path, "a") as fh:
            fh.write('{"kind": "entry", "takes": [4, 3, ')  # torn write
        with pytest.warns(UserWarning, match="corrupt trailing record"):
            report = count_tied(5, checkpoint=path)
        assert report.total == full.total
        # The torn line is physically gone.
        assert all(json.loads(line) for line in ledger_lines(path))

    def test_corrupt_middle_entry_is_refused(self, tmp_path):
        path, _ = run_with_ledger(tmp_path, 5)
        lines = ledger_lines(path)
        lines[2] = '{"kind": "entry", "takes": "broken"}'
        path.write_text("\n".join(lines) + "\n")
        with pytest.raises(CheckpointError, match="corrupt record"):
            count_tied(5, checkpoint=path)

    def test_conflicting_duplicate_is_refused(self, tmp_path):
        path, _ = run_with_ledger(tmp_path, 5)
        lines = ledger_lines(path)
        record = json.loads(lines[1])
        record["completions"] = str(int(record["completions"]) + 1)
        lines.insert(2, json.dumps(record))
        path.write_text("\n".join(lines) + "\n")
        with pytest.raises(CheckpointError, match="conflicting records"):
            count_tied(5, checkpoint=path)

    def test_tampered_factors_are_refused(self, tmp_path):
        path, _ = run_with_ledger(tmp_path, 5)
        lines = ledger_lines(path)
        record = json.loads(lines[1])
        record["representation"] += 1
        lines[1] = json.dumps(record)
        path.write_text("\n".join(lines) + "\n")
        with pytest.raises(CheckpointError, match="corrupt record"):
            count_tied(5, checkpoint=path)


class TestHeaderHelpers:
    def test_read_header(self, tmp_path):
        path, _ = run_with_ledger(tmp_path, 4, strict=True)
        header = CheckpointLedger.read_header(path)
        assert header["n"] == 4
        assert header["strict"] is True

    def test_read_header_missing_file(self, tmp_path):
        with pytest.raises(CheckpointError):
            CheckpointLedger.read_header(tmp_path / "absent.ledger")

"""
Tests for run event logs and artifacts
"""

import json

import pytest

from drinpoly.audit import AuditLogger, Event, EventType


def test_run_directories(tmp_path):
    logger = AuditLogger("run-1", tmp_path)

    assert (tmp_path / "run-1" / "logs").is_dir()
    assert (tmp_path / "run-1" / "artifacts").is_dir()
    assert logger.log_file == tmp_path / "run-1" / "logs" / "events.jsonl"


def test_events_are_appended_as_json_lines(tmp_path):
    logger = AuditLogger("run-2", tmp_path)
    logger.log_event(EventType.COMMAND, "frobenius", {"argv": ["frobenius"]})
    logger.log_event(EventType.RESULT, "X^2")

    lines = logger.log_file.read_text().splitlines()
    assert len(lines) == 2
    first = json.loads(lines[0])
    assert first["type"] == "command"
    assert first["data"] == {"argv": ["frobenius"]}
    assert "ts" in first


def test_artifacts(tmp_path):
    logger = AuditLogger("run-3", tmp_path)

    assert logger.save_artifact("result", "X^2\n", "text").read_text() == "X^2\n"
    assert logger.save_artifact("bench", "q,e\n2,1\n", "csv").suffix == ".csv"
    assert json.loads(logger.save_artifact("data", {"a": 1}).read_text()) == {"a": 1}

    with pytest.raises(ValueError):
        logger.save_artifact("image", b"", "png")


def test_summary_report(tmp_path):
    logger = AuditLogger("run-4", tmp_path)
    assert logger.final_status() == "in_progress"

    logger.log_event(EventType.COMMAND, "verify")
    logger.log_event(EventType.VERIFICATION, "isogeny")
    report = logger.generate_summary_report()

    assert report["final_status"] == "completed"
    assert report["statistics"]["total_events"] == 2
    assert report["statistics"]["by_type"] == {"command": 1, "verification": 1}
    assert "summary_report.json" in logger._list_artifacts()

    logger.log_event(EventType.ERROR, "boom")
    assert logger.final_status() == "failed"


def test_event_serialization():
    event = Event(type=EventType.BENCH_ROW, text="mff", data={"d": 8})
    data = json.loads(event.to_ndjson())

    assert data["type"] == "bench_row"
    assert data["data"] == {"d": 8}

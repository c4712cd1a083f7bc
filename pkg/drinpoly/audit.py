"""
Event logging, run directories and artifacts for CLI runs
"""

import json
from datetime import datetime, timezone
from enum import Enum
from pathlib import Path
from typing import Any

from pydantic import BaseModel, Field


class EventType(str, Enum):
    COMMAND = "command"
    RESULT = "result"
    BENCH_ROW = "bench_row"
    VERIFICATION = "verification"
    ERROR = "error"


def _now() -> datetime:
    return datetime.now(timezone.utc)


class Event(BaseModel):
    type: EventType
    text: str
    timestamp: datetime = Field(default_factory=_now)
    data: dict[str, Any] = Field(default_factory=dict)

    def to_ndjson(self) -> str:
        data = self.model_dump(mode="json")
        data["ts"] = data.pop("timestamp")
        return json.dumps(data, default=str) + "\n"


class AuditLogger:
    """Log events and keep artifacts of one run under <base_dir>/<run_id>"""

    def __init__(self, run_id: str, base_dir: str | Path = ".runs"):
        self.run_id = run_id
        self.base_dir = Path(base_dir)
        self.run_dir = self.base_dir / run_id
        self.events: list[Event] = []

        self._setup_directories()

    def _setup_directories(self) -> None:
        self.run_dir.mkdir(parents=True, exist_ok=True)
        (self.run_dir / "artifacts").mkdir(exist_ok=True)
        (self.run_dir / "logs").mkdir(exist_ok=True)

    @property
    def log_file(self) -> Path:
        return self.run_dir / "logs" / "events.jsonl"

    def log_event(self, event_type: EventType, text: str, data: dict[str, Any] | None = None) -> Event:
        event = Event(type=event_type, text=text, data=data or {})
        self.events.append(event)
        with open(self.log_file, "a") as f:
            f.write(event.to_ndjson())
        return event

    def save_artifact(self, name: str, content: Any, artifact_type: str = "json") -> Path:
        """Save an artifact; json, text and csv are supported"""

        if artifact_type == "json":
            path = self.run_dir / "artifacts" / f"{name}.json"
            with open(path, "w") as f:
                json.dump(content, f, indent=2, default=str)
        elif artifact_type == "text":
            path = self.run_dir / "artifacts" / f"{name}.txt"
            path.write_text(str(content))
        elif artifact_type == "csv":
            path = self.run_dir / "artifacts" / f"{name}.csv"
            path.write_text(str(content))
        else:
            raise ValueError(f"unknown artifact type {artifact_type!r}")
        return path

    def _statistics(self) -> dict[str, Any]:
        counts: dict[str, int] = {}
        for event in self.events:
            counts[event.type.value] = counts.get(event.type.value, 0) + 1
        return {
            "total_events": len(self.events),
            "errors": counts.get(EventType.ERROR.value, 0),
            "by_type": counts,
        }

    def _list_artifacts(self) -> list[str]:
        artifacts_dir = self.run_dir / "artifacts"
        if artifacts_dir.exists():
            return sorted(f.name for f in artifacts_dir.iterdir())
        return []

    def final_status(self) -> str:
        for event in reversed(self.events):
            if event.type is EventType.ERROR:
                return "failed"
            if event.type in (EventType.RESULT, EventType.VERIFICATION):
                return "completed"
        return "in_progress"

    def generate_summary_report(self) -> dict[str, Any]:
        """Summary of the run, also saved as the summary_report artifact"""

        report = {
            "run_id": self.run_id,
            "run_dir": str(self.run_dir),
            "statistics": self._statistics(),
            "artifacts": self._list_artifacts(),
            "final_status": self.final_status(),
        }
        self.save_artifact("summary_report", report, "json")
        return report

"""Durable named evidence sessions.

Sessions persist as an append-only JSONL event log, one ``put`` or
``delete`` event per line, replayed into memory when the store opens.
Appending is the only write mode, which makes the log safe against the
usual partial-write failure: a torn final line is ignored on replay and
overwritten by the next append. All operations serialize through one
lock, so the store can sit behind a threaded HTTP server unprotected.
"""

from __future__ import annotations

import json
import os
import threading
import time
import uuid
from dataclasses import asdict, dataclass
from pathlib import Path

from .errors import SessionNotFound, StorageUnavailable


@dataclass(frozen=True)
class Session:
    id: str
    label: str
    evidence: dict[str, str]
    created: float   # UTC seconds
    modified: float  # UTC seconds

    def descriptor(self) -> dict:
        return {"id": self.id, "label": self.label,
                "created": self.created, "modified": self.modified}


class SessionStore:
    def __init__(self, path: str | Path):
        self._path = Path(path)
        self._lock = threading.Lock()
        self._sessions: dict[str, Session] = {}
        self._needs_newline = False
        self._replay()

    def _replay(self) -> None:
        if not self._path.exists():
            return
        try:
            text = self._path.read_text()
        except OSError as exc:
            raise StorageUnavailable(f"cannot read session log: {exc}") from exc
        # a file ending mid-line means the last append was interrupted;
        # the next append must not glue its event onto the torn line
        self._needs_newline = bool(text) and not text.endswith("\n")
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            try:
                event = json.loads(line)
            except json.JSONDecodeError:
                continue  # torn trailing line from an interrupted append
            if event.get("event") == "put":
                data = event["session"]
                self._sessions[data["id"]] = Session(
                    id=data["id"], label=data["label"],
                    evidence=dict(data["evidence"]),
                    created=data["created"], modified=data["modified"],
                )
            elif event.get("event") == "delete":
                self._sessions.pop(event.get("id"), None)

    def _append(self, event: dict) -> None:
        try:
            self._path.parent.mkdir(parents=True, exist_ok=True)
            with self._path.open("a") as handle:
                prefix = "\n" if self._needs_newline else ""
                handle.write(prefix + json.dumps(event, sort_keys=True) + "\n")
                handle.flush()
                os.fsync(handle.fileno())
            self._needs_newline = False
        except OSError as exc:
            raise StorageUnavailable(f"cannot append to session log: {exc}") from exc

    def list(self) -> list[Session]:
        """All sessions, ascending by modified time, id breaking ties."""
        with self._lock:
            return sorted(self._sessions.values(), key=lambda s: (s.modified, s.id))

    def get(self, session_id: str) -> Session:
        with self._lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise SessionNotFound(f"no session with id {session_id!r}")
        return session

    def create(self, label: str, evidence: dict[str, str]) -> Session:
        with self._lock:
            session_id = uuid.uuid4().hex[:12]
            while session_id in self._sessions:
                session_id = uuid.uuid4().hex[:12]
            now = time.time()
            session = Session(id=session_id, label=label,
                              evidence=dict(evidence), created=now, modified=now)
            self._append({"event": "put", "session": asdict(session)})
            self._sessions[session_id] = session
            return session

    def update(self, session_id: str, label: str | None = None,
               evidence: dict[str, str] | None = None) -> Session:
        with self._lock:
            old = self._sessions.get(session_id)
            if old is None:
                raise SessionNotFound(f"no session with id {session_id!r}")
            session = Session(
                id=old.id,
                label=old.label if label is None else label,
                evidence=dict(old.evidence if evidence is None else evidence),
                created=old.created,
                modified=time.time(),
            )
            self._append({"event": "put", "session": asdict(session)})
            self._sessions[session_id] = session
            return session

    def delete(self, session_id: str) -> None:
        with self._lock:
            if session_id not in self._sessions:
                raise SessionNotFound(f"no session with id {session_id!r}")
            self._append({"event": "delete", "id": session_id})
            del self._sessions[session_id]

"""Text and JSON rendering of suite reports."""
from __future__ import annotations

import json
import sys
from typing import Iterable, TextIO

from .suite import CheckReport, SuiteConfig

SUITE_NAME = "embverify"


def text_line(r: CheckReport) -> str:
    return f"{r.status.upper():<4}  {r.id}  {r.detail}".rstrip()


def render_text(reports: Iterable[CheckReport]) -> str:
    lines = [text_line(r) for r in reports]
    return "\n".join(lines) + ("\n" if lines else "")


def _jsonable(v):
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if v is None or isinstance(v, (bool, int, float, str)):
        return v
    return str(v)


def render_json(reports: Iterable[CheckReport], cfg: SuiteConfig | None = None) -> str:
    doc = {
        "suite": SUITE_NAME,
        "config": cfg.as_dict() if cfg is not None else {},
        "checks": [_jsonable(r.as_dict()) for r in reports],
    }
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def emit_report(reports: list[CheckReport], fmt: str = "text", destination: str | TextIO | None = None,
                cfg: SuiteConfig | None = None) -> str:
    if fmt == "text":
        out = render_text(reports)
    elif fmt == "json":
        out = render_json(reports, cfg)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    if destination is None:
        sys.stdout.write(out)
    elif isinstance(destination, str):
        with open(destination, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        destination.write(out)
    return out

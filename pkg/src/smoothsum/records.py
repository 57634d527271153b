"""Output records and their text / JSON / CSV encodings.

Rationals never pass through floating point: JSON carries them as
``{"num": "<signed decimal>", "den": "<positive decimal>"}``.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional, Union

PaperDen = Union[int, tuple[int, int]]


@dataclass
class OutputRecord:
    index: str
    value: Optional[Fraction] = None
    method: Optional[str] = None
    divergent: Optional[dict[int, Fraction]] = None
    tail: Optional[list[Fraction]] = None
    fields: dict[str, Any] = field(default_factory=dict)
    footnote: Optional[str] = None
    # denominator the value is conventionally printed over, e.g. 1440
    # for -3/160, or (720, 2) for 720^2
    paper_den: Optional[PaperDen] = None


@dataclass
class Output:
    command: str
    records: list[OutputRecord] = field(default_factory=list)
    footnotes: list[str] = field(default_factory=list)


def fmt(value: Fraction, paper_den: Optional[PaperDen] = None, paper_form: bool = False) -> str:
    value = Fraction(value)
    if paper_form and paper_den is not None:
        if isinstance(paper_den, tuple):
            base, exp = paper_den
            den = base**exp
            label = f"{base}^{exp}" if exp > 1 else str(base)
        else:
            den = label = paper_den
        scaled = value * den
        if scaled.denominator == 1 and den != 1:
            return f"{scaled.numerator}/{label}"
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def rational_json(value: Fraction) -> dict[str, str]:
    value = Fraction(value)
    return {"num": str(value.numerator), "den": str(value.denominator)}


def _jsonable(v):
    if isinstance(v, Fraction):
        return rational_json(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return v


def record_json(rec: OutputRecord, paper_form: bool = False) -> dict:
    out: dict[str, Any] = {"index": rec.index}
    if rec.method is not None:
        out["method"] = rec.method
    if rec.value is not None:
        out["value"] = rational_json(rec.value)
        if paper_form and rec.paper_den is not None:
            out["paper_form"] = fmt(rec.value, rec.paper_den, True)
    if rec.divergent is not None:
        out["divergent"] = [
            {"power": p, "coeff": rational_json(c)} for p, c in sorted(rec.divergent.items())
        ]
    if rec.tail is not None:
        out["tail"] = [rational_json(c) for c in rec.tail]
    if rec.fields:
        out["fields"] = _jsonable(rec.fields)
    if rec.footnote:
        out["footnote"] = rec.footnote
    return out


def to_json(output: Output, paper_form: bool = False) -> str:
    doc = {
        "command": output.command,
        "records": [record_json(r, paper_form) for r in output.records],
    }
    if output.footnotes:
        doc["footnotes"] = output.footnotes
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _field_text(v, paper_form: bool) -> str:
    if isinstance(v, Fraction):
        return fmt(v, None, paper_form)
    if isinstance(v, (list, tuple)):
        return " ".join(_field_text(x, paper_form) for x in v)
    return str(v)


def to_text(output: Output, paper_form: bool = False) -> str:
    lines = []
    for rec in output.records:
        head = rec.index
        if rec.method:
            head += f" [{rec.method}]"
        if rec.value is not None:
            head += f": {fmt(rec.value, rec.paper_den, paper_form)}"
        lines.append(head)
        if rec.divergent is not None:
            div = ", ".join(f"t^{p}: {fmt(c)}" for p, c in sorted(rec.divergent.items()))
            lines.append(f"  divergent: {{{div}}}")
        if rec.tail is not None:
            lines.append("  tail: [" + ", ".join(fmt(c) for c in rec.tail) + "]")
        for name, v in rec.fields.items():
            lines.append(f"  {name}: {_field_text(v, paper_form)}")
        if rec.footnote:
            lines.append(f"  note: {rec.footnote}")
    for note in output.footnotes:
        lines.append(f"* {note}")
    return "\n".join(lines) + "\n"


def to_csv(output: Output, paper_form: bool = False) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["index", "method", "value"])
    for rec in output.records:
        if rec.divergent is not None or rec.tail is not None:
            for p, c in sorted((rec.divergent or {}).items()):
                w.writerow([f"{rec.index}:t^{p}", rec.method or "", fmt(c)])
            if rec.value is not None:
                w.writerow([f"{rec.index}:t^0", rec.method or "", fmt(rec.value)])
            for p, c in enumerate(rec.tail or [], start=1):
                w.writerow([f"{rec.index}:t^{p}", rec.method or "", fmt(c)])
            continue
        value = "" if rec.value is None else fmt(rec.value, rec.paper_den, paper_form)
        w.writerow([rec.index, rec.method or "", value])
    return buf.getvalue()


FORMATTERS = {"text": to_text, "json": to_json, "csv": to_csv}


def render(output: Output, fmt_name: str = "text", paper_form: bool = False) -> str:
    return FORMATTERS[fmt_name](output, paper_form)

"""Plain-text, CSV and LaTeX rendering of labelled grids."""

from __future__ import annotations

import csv
import io
import unicodedata
from typing import Sequence

_LATEX_SYMBOLS = {
    "ι": r"\iota", "γ": r"\gamma", "κ": r"\kappa", "Θ": r"\Theta", "φ": r"\varphi", "χ": r"\chi",
    "λ": r"\lambda", "Φ": r"\Phi", "ψ": r"\psi", "ω": r"\omega", "⊗": r"\otimes", "σ": r"\sigma",
}
_HAT_MARK = "̂"


def _width(s: str) -> int:
    # combining marks (the hats) take no column
    return sum(0 if unicodedata.combining(ch) else 1 for ch in s)


def _pad(s: str, width: int) -> str:
    return s + " " * (width - _width(s))


def text_grid(corner: str, headers: Sequence[str], rows: Sequence[tuple[str, Sequence[str]]]) -> str:
    cols = [[corner, *(name for name, _ in rows)]]
    for j, h in enumerate(headers):
        cols.append([h, *(cells[j] for _, cells in rows)])
    widths = [max(_width(x) for x in col) for col in cols]
    lines = []
    for i in range(len(rows) + 1):
        cells = [_pad(col[i], w) for col, w in zip(cols, widths)]
        lines.append((cells[0] + " | " + "  ".join(cells[1:])).rstrip())
        if i == 0:
            lines.append("-" * (widths[0] + 1) + "+" + "-" * (sum(widths[1:]) + 2 * (len(widths) - 2) + 1))
    return "\n".join(lines) + "\n"


def csv_grid(corner: str, headers: Sequence[str], rows: Sequence[tuple[str, Sequence[str]]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([corner, *headers])
    for name, cells in rows:
        w.writerow([name, *cells])
    return buf.getvalue()


def latex_text(s: str) -> str:
    out = []
    for ch in s:
        if ch == "\\":
            out.append(r"\textbackslash{}")
        elif ch in "#%&_{}$":
            out.append("\\" + ch)
        else:
            out.append(ch)
    return "".join(out)


def latex_math(s: str) -> str:
    """Inline-math form of a label or value such as '2[ι]', '-Ĉ*P̂' or 'φ10'."""
    s = unicodedata.normalize("NFD", s)
    out = []
    i = 0
    while i < len(s):
        ch = s[i]
        body = _LATEX_SYMBOLS.get(ch, ch)
        i += 1
        if i < len(s) and s[i] == _HAT_MARK:
            body = r"\hat{" + body + "}"
            i += 1
        elif body.startswith("\\"):
            digits = ""
            while i < len(s) and s[i].isdigit():
                digits += s[i]
                i += 1
            body = body + "_{" + digits + "}" if digits else body + "{}"
        out.append(body)
    text = "".join(out).replace("#", r"\#").replace("%", r"\%").replace("&", r"\&")
    return "$" + text + "$"


def latex_grid(corner: str, headers: Sequence[str], rows: Sequence[tuple[str, Sequence[str]]],
               caption: str = "") -> str:
    colspec = "c|" + "c" * len(headers)
    lines = [r"\begin{tabular}{" + colspec + "}", r"\hline"]
    lines.append(" & ".join([latex_text(corner), *(latex_math(h) for h in headers)]) + r" \\")
    lines.append(r"\hline")
    for name, cells in rows:
        lines.append(" & ".join([latex_math(name), *(latex_math(c) for c in cells)]) + r" \\")
    lines.append(r"\hline")
    lines.append(r"\end{tabular}")
    if caption:
        lines.append("% " + caption)
    return "\n".join(lines) + "\n"


def grid(fmt: str, corner: str, headers: Sequence[str], rows: Sequence[tuple[str, Sequence[str]]],
         caption: str = "") -> str:
    if fmt == "text":
        return text_grid(corner, headers, rows)
    if fmt == "csv":
        return csv_grid(corner, headers, rows)
    if fmt == "latex":
        return latex_grid(corner, headers, rows, caption)
    raise ValueError(f"grid format {fmt!r} not supported")

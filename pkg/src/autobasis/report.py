"""Plain-text and flat key-value rendering of analysis reports."""

from dataclasses import dataclass, field
from fractions import Fraction

FORMAT_VERSION = "autobasis-report/1"


def format_word(word, k):
    """LSD-first digits as a string; digits are dot-separated when k > 10."""
    if not word:
        return "ε"
    if k <= 10:
        return "".join(str(d) for d in word)
    return ".".join(str(d) for d in word)


def format_value(value):
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(format_value(v) for v in value) + "]"
    return str(value)


@dataclass
class Report:
    command: str
    fields: list = field(default_factory=list)

    def add(self, key, value):
        self.fields.append((key, value))
        return self

    def get(self, key):
        for k, v in self.fields:
            if k == key:
                return v
        raise KeyError(key)

    def render_text(self):
        width = max((len(k) for k, _ in self.fields), default=0)
        lines = [f"{self.command}"]
        lines.extend(f"  {k.ljust(width)}  {format_value(v)}" for k, v in self.fields)
        return "\n".join(lines) + "\n"

    def render_kv(self):
        lines = [f"format: {FORMAT_VERSION}", f"command: {self.command}"]
        lines.extend(f"{k}: {format_value(v)}" for k, v in self.fields)
        return "\n".join(lines) + "\n"


def parse_kv(text):
    """Inverse of :meth:`Report.render_kv` at the string level."""
    out = {}
    for line in text.splitlines():
        if not line.strip():
            continue
        key, _, value = line.partition(": ")
        out[key] = value
    return out

"""
Console Output Panel
Line-oriented output with status markers, written to a text stream
"""

import sys
from typing import List, Optional, TextIO


def _ansi(color: str) -> str:
    """24-bit ANSI foreground escape for a "#rrggbb" color."""
    value = color.lstrip("#")
    r, g, b = int(value[0:2], 16), int(value[2:4], 16), int(value[4:6], 16)
    return f"\033[38;2;{r};{g};{b}m"


class OutputPanel:
    """Console counterpart of a scrolling output widget"""

    def __init__(self, stream: Optional[TextIO] = None, use_color: Optional[bool] = None):
        self.stream = stream if stream is not None else sys.stdout
        if use_color is None:
            use_color = bool(getattr(self.stream, "isatty", lambda: False)())
        self.use_color = use_color
        self.lines: List[str] = []

    def append_output(self, text: str, color: Optional[str] = None):
        """
        Append text to the output

        Args:
            text: Text to append
            color: Optional color override (hex format), used only on terminals
        """
        self.lines.append(text)
        if color and self.use_color:
            self.stream.write(f"{_ansi(color)}{text}\033[0m\n")
        else:
            self.stream.write(text + "\n")
        self.stream.flush()

    def append_error(self, text: str):
        self.append_output(f"✗ {text}", "#ff0000")

    def append_separator(self):
        self.append_output("=" * 60, "#808080")

    def get_text(self) -> str:
        """Everything appended so far, without color codes."""
        return "\n".join(self.lines)

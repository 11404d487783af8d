from __future__ import annotations

import contextlib
import io

from fanodescent.cli import main


def run_cli(argv: list[str]) -> tuple[int, str, str]:
    """Run the CLI in-process, capturing (exit_code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()

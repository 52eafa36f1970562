"""PASS/FAIL lines collected by the acceptance suite, printed in the terminal summary."""

import contextlib
import time

RESULTS: list[str] = []


@contextlib.contextmanager
def criterion(number: int, title: str):
    notes: dict = {}
    start = time.perf_counter()
    ok = False
    try:
        yield notes
        ok = True
    finally:
        extra = ", ".join(f"{k}={v}" for k, v in notes.items())
        line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} [{time.perf_counter() - start:.1f}s]"
        if extra:
            line += f" ({extra})"
        RESULTS.append(line)
        print(line)

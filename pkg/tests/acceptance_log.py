"""Collects one PASS/FAIL line per acceptance criterion."""

RESULTS: list[str] = []


def record(tag: str, title: str, ok: bool, detail: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'} {tag} {title}: {detail}"
    RESULTS.append(line)
    print(line)

from typing import List
import datetime

from .verify import SuiteResult


def generate_markdown_report(
    results: List[SuiteResult],
    out_path: str,
    title: str = "Palindromization Verification Report",
    settings: dict | None = None,
    timestamp: str | None = None,
) -> None:
    """
    Сохранить markdown-файл с таблицей по наборам проверок.

    Args:
        results: Результаты наборов проверок.
        out_path: Путь для сохранения отчета.
        title: Заголовок отчета.
        settings: Параметры прогона (scope, max_len, ...) для шапки.
        timestamp: Дата в шапке (по умолчанию текущее время).
    """
    if timestamp is None:
        timestamp = datetime.datetime.now().strftime("%Y-%m-%d %H:%M:%S")

    lines = [
        f"# {title}",
        f"",
        f"**Date:** {timestamp}",
        f"",
    ]

    if settings:
        lines.append("## Settings")
        lines.append("")
        for key, value in settings.items():
            lines.append(f"- **{key}:** {value}")
        lines.append("")

    lines += [
        f"## Suites",
        f"",
        f"| Suite | Checked | Failures | Status |",
        f"|-------|---------|----------|--------|"
    ]

    any_failure = False

    for result in results:
        status = "🟢 PASS" if result.passed else "🔴 **FAIL**"
        if not result.passed:
            any_failure = True
        lines.append(
            f"| `{result.name}` | {result.checked} | {len(result.failures)} | {status} |"
        )

    lines.append("")

    if any_failure:
        lines.append("## First Counterexamples")
        lines.append("")
        for result in results:
            for message in result.failures[:5]:
                lines.append(f"- `{result.name}`: {message}")
        lines.append("")
        lines.append("> [!WARNING]")
        lines.append("> Verification failed! See the counterexamples above.")
    else:
        lines.append("> [!NOTE]")
        lines.append("> All properties verified.")

    with open(out_path, 'w', encoding='utf-8') as f:
        f.write("\n".join(lines))

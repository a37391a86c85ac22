import csv
from typing import Any, Iterable, Sequence


def formatCell(value: Any) -> str:
    """
    Render floats with 12 significant digits and everything else with str.
    """
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def writeCsv(path: str, header: Sequence[str],
             rows: Iterable[Sequence[Any]]) -> None:
    """
    Write an RFC-4180 CSV file (CRLF line endings, minimal quoting).

    :param path: Target file.
    :type path: str
    :param header: Column names.
    :type header: Sequence[str]
    :param rows: Data rows.
    :type rows: Iterable[Sequence[Any]]

    :raises OSError: If the file cannot be written.
    """
    with open(path, 'w', encoding='utf-8', newline='') as file:
        writer = csv.writer(file, lineterminator='\r\n')
        writer.writerow(header)
        for row in rows:
            writer.writerow([formatCell(value) for value in row])

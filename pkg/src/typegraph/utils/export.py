"""Export utilities for comparison tables (CSV) and reports (JSON)."""
from __future__ import annotations

from pathlib import Path
from typing import Any

import pandas as pd
from loguru import logger
from pydantic import BaseModel

TABLE_COLUMNS = ["type", "n", "paper_colors", "chi_exact", "greedy"]
INTEGER_COLUMNS = ["n", "paper_colors", "chi_exact", "greedy"]


def table_frame(rows: list[dict[str, Any]]) -> pd.DataFrame:
    """
    Build the comparison table.

    Args:
        rows: One dict per (type, n) with the keys of TABLE_COLUMNS; chi_exact
            may be None when the exact search ran out of budget

    Returns:
        DataFrame with columns in TABLE_COLUMNS order and nullable integer columns

    Raises:
        ValueError: If a row is missing a required column
    """
    df = pd.DataFrame(rows, columns=TABLE_COLUMNS) if rows else pd.DataFrame(columns=TABLE_COLUMNS)
    for row in rows:
        missing = [column for column in TABLE_COLUMNS if column not in row]
        if missing:
            raise ValueError(f"Missing required columns: {missing}")
    for column in INTEGER_COLUMNS:
        df[column] = df[column].astype("Int64")
    df["type"] = df["type"].astype(str)
    return df


def table_to_csv(rows: list[dict[str, Any]]) -> str:
    """Render the table as CSV text; missing exact values become empty cells."""
    return table_frame(rows).to_csv(index=False, lineterminator="\n")


def export_table_csv(rows: list[dict[str, Any]], file_path: str | Path) -> None:
    """
    Write the comparison table to a CSV file.

    Args:
        rows: Table rows as accepted by :func:`table_frame`
        file_path: Output file path; parent directories are created
    """
    output_path = Path(file_path)
    validate_export_path(output_path)
    table_frame(rows).to_csv(output_path, index=False, encoding="utf-8", lineterminator="\n")
    logger.info(f"Exported {len(rows)} table rows to {output_path}")


def report_json(model: BaseModel) -> str:
    return model.model_dump_json(indent=2)


def export_report_json(model: BaseModel, file_path: str | Path) -> None:
    """Write a pydantic report as indented JSON."""
    output_path = Path(file_path)
    validate_export_path(output_path)
    output_path.write_text(report_json(model) + "\n", encoding="utf-8")
    logger.info(f"Wrote {type(model).__name__} to {output_path}")


def validate_export_path(file_path: Path) -> None:
    """Create the parent directory of an export target if needed."""
    directory = file_path.parent
    if not directory.exists():
        logger.debug(f"Creating export directory {directory}")
        directory.mkdir(parents=True, exist_ok=True)

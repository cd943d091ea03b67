"""Rewrite the committed files under reports/ and the packaged catalog data.

    python3 tools/regenerate_reports.py
"""

import json
from pathlib import Path

from homtrias import catalog

ROOT = Path(__file__).resolve().parents[1]


def main() -> None:
    out = ROOT / "reports"
    out.mkdir(exist_ok=True)
    report = catalog.verify_catalog()
    (out / "discrepancy-report.json").write_text(json.dumps(report.to_json(), indent=2, ensure_ascii=False) + "\n")
    (out / "discrepancy-report.txt").write_text(report.render() + "\n")
    (out / "transcription-manifest.json").write_text(json.dumps(catalog.manifest(), indent=2, ensure_ascii=False) + "\n")
    catalog.export()


if __name__ == "__main__":
    main()

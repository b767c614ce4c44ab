"""Exporting a triangle as JSON or CSV, and reading it back.

Run:  python3 demos/06_export.py
"""
from fibostirling import export, stirling

tri = stirling.triangle("cFbar", 4)
csv_text = export.to_csv(tri)
print(csv_text)
back = export.from_csv(csv_text)
print("CSV round trip identical:", export.to_csv(back) == csv_text)
js = export.to_json(tri)
print("JSON round trip identical:", export.to_json(export.from_json(js)) == js)

import sys
import xml.etree.ElementTree as ET

path, want = sys.argv[1], int(sys.argv[2])
root = ET.parse(path).getroot()
ns = "{http://www.w3.org/2000/svg}"
assert root.tag == ns + "svg", root.tag
assert root.get("viewBox") == "0 0 800 600", root.get("viewBox")
lines = [p for p in root.iter(ns + "polyline") if p.get("class") == "series"]
assert len(lines) == want, f"{len(lines)} series polylines, expected {want}"
assert any(l.get("class") == "asymptote" for l in root.iter(ns + "line")), "no asymptote"

"""Interactive Plotly dashboard for spectral germs and crosscheck results."""

import json
from typing import Any, Dict, List, Mapping, Optional

import pandas as pd
import plotly.graph_objects as go
from plotly.subplots import make_subplots

from analytics.metrics import crosscheck_counts


def exponent_frame(records: List[Dict[str, Any]]) -> pd.DataFrame:
    """DataFrame of ``laurent_exponent_grid`` records, exact zeros as NaN."""
    df = pd.DataFrame.from_records(records)
    if not df.empty:
        df["exponent"] = pd.to_numeric(df["exponent"], errors="coerce")
    return df


def create_exponent_heatmap(df: pd.DataFrame) -> go.Figure:
    """Heat map of Laurent exponents over (alpha0, m).

    Blank cells are exact zeros.  Hovering shows k0 and whether the spectral
    and closed-form invertibility tests agree at that alpha0.
    """
    if df.empty:
        return go.Figure().add_annotation(text="No spectral data")

    grid = df.pivot(index="m", columns="alpha0", values="exponent")
    per_alpha = df.drop_duplicates("alpha0").set_index("alpha0")
    hover = [
        [
            f"alpha0={per_alpha.loc[a, 'alpha0_text']}<br>m={m}<br>exponent={grid.loc[m, a]}"
            f"<br>k0={per_alpha.loc[a, 'k0']}<br>invertible={per_alpha.loc[a, 'invertible']}"
            for a in grid.columns
        ]
        for m in grid.index
    ]
    fig = go.Figure(
        go.Heatmap(
            z=grid.values,
            x=[str(per_alpha.loc[a, "alpha0_text"]) for a in grid.columns],
            y=list(grid.index),
            colorscale="RdBu",
            zmid=0,
            hovertext=hover,
            hoverinfo="text",
            colorbar=dict(title="exponent"),
        )
    )
    fig.update_layout(title="Laurent exponents of eigenvalue germs", xaxis_title="alpha0", yaxis_title="m", height=500)
    return fig


def create_invertibility_strip(df: pd.DataFrame) -> go.Figure:
    """k0 per alpha0, with markers colored by invertibility and agreement."""
    if df.empty:
        return go.Figure().add_annotation(text="No spectral data")
    per_alpha = df.drop_duplicates("alpha0").sort_values("alpha0")
    colors = [
        "crimson" if not agree else ("steelblue" if inv else "orange")
        for inv, agree in zip(per_alpha["invertible"], per_alpha["agrees"])
    ]
    fig = go.Figure(
        go.Scatter(
            x=per_alpha["alpha0_text"],
            y=per_alpha["k0"],
            mode="markers+lines",
            marker=dict(size=12, color=colors, line=dict(width=1, color="navy")),
            hovertext=[f"invertible={i}, agrees={a}" for i, a in zip(per_alpha["invertible"], per_alpha["agrees"])],
            hoverinfo="text",
        )
    )
    fig.update_layout(title="Lowest exponent k0 (blue invertible, orange singular, red disagreement)", height=350)
    return fig


def create_crosscheck_bars(results: List[Mapping[str, Any]]) -> go.Figure:
    """Passed and failed cell counts per grid kind."""
    counts = crosscheck_counts(results)
    if not counts:
        return go.Figure().add_annotation(text="No crosscheck results")
    grids = sorted(counts)
    fig = make_subplots(rows=1, cols=1)
    fig.add_trace(go.Bar(x=grids, y=[counts[g]["passed"] for g in grids], name="passed", marker_color="seagreen"))
    fig.add_trace(go.Bar(x=grids, y=[counts[g]["failed"] for g in grids], name="failed", marker_color="crimson"))
    fig.update_layout(barmode="stack", title="Crosscheck cells per grid", height=400)
    return fig


def generate_dashboard_html(
    records: List[Dict[str, Any]],
    crosscheck_results: Optional[List[Mapping[str, Any]]] = None,
    output_file: str = "dashboard.html",
) -> str:
    """Generate a combined HTML dashboard.

    Args:
        records: Output of ``laurent_exponent_grid``.
        crosscheck_results: Optional ``crosscheck_grid`` outputs.
        output_file: Output HTML file path.

    Returns:
        Path to the generated HTML file.
    """
    df = exponent_frame(records)
    figures = [
        ("heat-chart", "Eigenvalue germs over (alpha0, m)", create_exponent_heatmap(df)),
        ("k0-chart", "Invertibility by alpha0", create_invertibility_strip(df)),
    ]
    if crosscheck_results:
        figures.append(("cc-chart", "Crosscheck results", create_crosscheck_bars(crosscheck_results)))

    with open(output_file, "w", encoding="utf-8") as f:
        f.write("<!DOCTYPE html>\n<html>\n<head>\n")
        f.write('<meta charset="utf-8">\n')
        f.write("<title>Degenerate Principal Series Dashboard</title>\n")
        f.write('<script src="https://cdn.plot.ly/plotly-latest.min.js"></script>\n')
        f.write("<style>\n")
        f.write("body { font-family: Arial, sans-serif; margin: 10px; }\n")
        f.write(".chart-container { margin: 20px 0; border: 1px solid #ccc; padding: 10px; }\n")
        f.write("</style>\n")
        f.write("</head>\n<body>\n")
        f.write("<h1>Degenerate Principal Series Dashboard</h1>\n")

        for div_id, title, _ in figures:
            f.write("<div class='chart-container'>\n")
            f.write(f"<h2>{title}</h2>\n")
            f.write(f"<div id='{div_id}'></div>\n")
            f.write("</div>\n")

        if crosscheck_results:
            failing = [
                {"grid": r["grid"], "key": c["key"]} for r in crosscheck_results for c in r["cells"] if not c["pass"]
            ]
            f.write("<div class='chart-container'><h2>Failing cells</h2><ul id='failures'></ul></div>\n")
        else:
            failing = []

        f.write("<script>\n")
        for div_id, _, fig in figures:
            var = div_id.replace("-", "_")
            f.write(f"var {var} = {fig.to_json()};\n")
            f.write(f"Plotly.newPlot('{div_id}', {var}.data, {var}.layout);\n")
        f.write(f"var failing = {json.dumps(failing)};\n")
        f.write(
            "var ul = document.getElementById('failures'); if (ul) { failing.forEach(c => { "
            "var li = document.createElement('li'); li.textContent = c.grid + ': ' + c.key; ul.appendChild(li); }); }\n"
        )
        f.write("</script>\n")
        f.write("</body>\n</html>\n")

    return output_file

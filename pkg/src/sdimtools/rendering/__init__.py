"""
rendering - text and SVG pictures of cup diagrams.
"""
from .cup_diagram_plot import render_ascii, render_svg

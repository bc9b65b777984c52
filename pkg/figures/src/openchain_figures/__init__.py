from .render import FigureJob, RenderError, build_figure, load_rows, render_figure

__all__ = ["FigureJob", "RenderError", "build_figure", "load_rows", "render_figure"]

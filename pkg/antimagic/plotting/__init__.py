from .mpl_backend import Plot as MplPlot

__backends__ = {
    "matplotlib": MplPlot,
    None: MplPlot
}


class Plot:
    """Backend dispatcher, ``Plot()`` draws with matplotlib."""

    def __init__(self, backend: str or None = None):
        self._backend_name = backend or "matplotlib"
        self._backend = __backends__[self._backend_name]()

    def scatter(self, x, y, *args, **kwargs):
        return self._backend.scatter(x, y, *args, **kwargs)

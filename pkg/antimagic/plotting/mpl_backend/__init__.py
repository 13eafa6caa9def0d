import matplotlib.pyplot as plt


class Plot:

    def _get_ax(self, ax):
        # ax handling taken from pandas source code here:
        # https://github.com/pandas-dev/pandas/blob/main/pandas/plotting/_matplotlib/__init__.py#L64
        if ax is None and len(plt.get_fignums()) > 0:
            with plt.rc_context():
                ax = plt.gca()
            ax = getattr(ax, "left_ax", ax)
        if ax is None:
            fig, ax = plt.subplots()
        return ax

    def scatter(self, x, y, ax=None, xlabel=None, ylabel=None, yerr=None, reference=None, logx=False, logy=False,
                label=None, **kwargs):
        ax = self._get_ax(ax)
        if yerr is not None:
            ax.errorbar(x, y, yerr=yerr, fmt='o', capsize=3, label=label, **kwargs)
        else:
            ax.plot(x, y, 'o', label=label, **kwargs)
        if reference is not None:
            ref_x, ref_y, ref_label = reference
            ax.plot(ref_x, ref_y, '--', label=ref_label)
        if logx:
            ax.set_xscale('log')
        if logy:
            ax.set_yscale('log')
        if xlabel is not None:
            ax.set_xlabel(xlabel)
        if ylabel is not None:
            ax.set_ylabel(ylabel)
        if label is not None or reference is not None:
            ax.legend()
        return ax

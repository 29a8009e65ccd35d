from shakelink.lab.recipes import fig11_recipe, strong_shake_hopf_recipe
from shakelink.lab import fixtures as fx
from shakelink.plotting import plot_report


def test_plot_is_written_and_reproducible(tmp_path):
    a = plot_report(fig11_recipe(), tmp_path / "a.png")
    b = plot_report(fig11_recipe(), tmp_path / "b.png")
    assert a.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
    assert a.read_bytes() == b.read_bytes()


def test_plot_without_nonvanishing_values(tmp_path):
    from shakelink.construct import MultidiskSpec
    from shakelink.lab.recipes import lemma41_recipe

    rep = lemma41_recipe(fx.unlink(2), fx.trivial_sl(2), MultidiskSpec((((1, 1),), ((2, 1),))))
    assert plot_report(rep, tmp_path / "c.png").stat().st_size > 0
    assert plot_report(strong_shake_hopf_recipe(fx.trivial_sl(1)), tmp_path / "d.png").exists()

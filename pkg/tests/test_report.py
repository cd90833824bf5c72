import csv

import numpy as np

from gconv import gram, symbol
from gconv.report import gram_profile, render_figure, symbol_profile, write_csv

from helpers import random_filter, random_spec, random_system


def test_symbol_profile_square():
    rng = np.random.default_rng(90)
    spec = random_spec(rng, max_card=16, min_card=2)
    sym = symbol(random_filter(rng, spec, 2, 2))
    table = symbol_profile(sym)
    assert table.columns[-3:] == ("sigma_max", "sigma_min", "abs_det")
    assert len(table.rows) == spec.cardinality
    for row in table.rows:
        sig_max, sig_min = row[-3], row[-2]
        assert sig_max >= sig_min >= 0.0


def test_symbol_profile_rectangular():
    rng = np.random.default_rng(91)
    spec = random_spec(rng, max_card=12)
    table = symbol_profile(symbol(random_filter(rng, spec, 2, 3)))
    assert "abs_det" not in table.columns


def test_gram_profile():
    rng = np.random.default_rng(92)
    system = random_system(rng, max_ambient=24)
    table = gram_profile(gram(system).gram_symbol)
    assert table.columns[-3:] == ("lambda_min", "lambda_max", "det")
    assert len(table.rows) == system.acting.cardinality


def test_csv_and_figure_outputs(tmp_path):
    rng = np.random.default_rng(93)
    spec = random_spec(rng, max_card=16, min_card=2)
    table = symbol_profile(symbol(random_filter(rng, spec, 2, 2)))

    csv_path = tmp_path / "profile.csv"
    write_csv(table, csv_path)
    with open(csv_path, newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == list(table.columns)
    assert len(rows) == len(table.rows) + 1

    png_path = tmp_path / "profile.png"
    render_figure(table, png_path)
    header = png_path.read_bytes()[:8]
    assert header == b"\x89PNG\r\n\x1a\n"

import json

import numpy as np
import pytest

from linemix.core.types import Dataset
from linemix.errors import CsvFormatError, ScenarioError
from linemix.io import schemas
from linemix.io.csv_codec import dump_dataset, format_float, parse_dataset, read_dataset, write_dataset, write_table
from linemix.scenarios.catalog import builtin
from linemix.scenarios.generate import generate


class TestCsv:
    def test_format(self):
        d = Dataset(x=[1.0, 2.5], y=[0.1, -3.0], truth=[1, 2])
        assert dump_dataset(d) == "x,y,label\n1,0.10000000000000001,1\n2.5,-3,2\n"
        assert format_float(1 / 3) == "0.33333333333333331"

    def test_file_reads_back_bitwise(self, tmp_path):
        d = generate(builtin("scenario1", seed=7))
        path = tmp_path / "batch.csv"
        write_dataset(d, path)
        back = read_dataset(path)
        np.testing.assert_array_equal(back.x, d.x)
        np.testing.assert_array_equal(back.y, d.y)
        np.testing.assert_array_equal(back.truth, d.truth)

    def test_unlabeled_header(self):
        d = parse_dataset("x,y\n1,2\n\n3,4\n")
        assert d.n == 2
        assert not d.has_truth

    @pytest.mark.parametrize(
        "text, line",
        [
            ("a,b\n1,2\n", 1),
            ("", 1),
            ("x,y\n1,2\n3,oops\n", 3),
            ("x,y,label\n1,2,1\n3,4\n", 3),
            ("x,y,label\n1,2,0\n", 2),
            ("x,y\n1,inf\n", 2),
            ("x,y\n", 1),
        ],
    )
    def test_errors_name_the_line(self, text, line):
        with pytest.raises(CsvFormatError) as err:
            parse_dataset(text)
        assert err.value.line_number == line
        assert str(err.value).startswith(f"line {line}:")

    def test_write_table(self, tmp_path):
        path = tmp_path / "t.csv"
        write_table(path, ["method", "value"], [["em", 0.5], ["kmeans", 2]])
        assert path.read_text() == "method,value\nem,0.5\nkmeans,2\n"


class TestSchemas:
    def test_scenario_file(self, tmp_path):
        path = tmp_path / "spec.json"
        path.write_text(json.dumps({"name": "one", "targets": [{"a": 2, "b": 3, "sigma2": 1.0}], "n_range": [10, 12]}))
        spec = schemas.load_scenario_file(path)
        assert spec.name == "one"
        assert spec.true_params == ((2.0, 3.0),)
        assert spec.n_range == (10, 12)
        assert spec.seed == 0

    @pytest.mark.parametrize(
        "payload",
        [
            {"targets": []},
            {"targets": [{"a": 1, "b": 1, "sigma2": 0}]},
            {"targets": [{"a": 1, "b": 1, "sigma2": 1}], "n_range": [5, 2]},
            {"targets": [{"a": 1, "b": 1, "sigma2": 1}], "colour": "red"},
        ],
    )
    def test_invalid_scenario_file(self, tmp_path, payload):
        path = tmp_path / "spec.json"
        path.write_text(json.dumps(payload))
        with pytest.raises(ScenarioError):
            schemas.load_scenario_file(path)

    def test_missing_scenario_file(self, tmp_path):
        with pytest.raises(ScenarioError):
            schemas.load_scenario_file(tmp_path / "nope.json")

    def test_order_score_allows_missing_values(self):
        out = schemas.OrderScoreOut(L=3, score=None, loglik=None, iterations=0, feasible=False, reason="x")
        assert json.loads(schemas.dump_json(out))["score"] is None

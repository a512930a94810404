# coding: utf-8
#

import pytest

from monopres import utils


def test_read_text_argument(tmp_path):
    p = tmp_path / "term.txt"
    p.write_text("delta ; mu\n", encoding="utf-8")
    assert utils.read_text_argument(str(p)) == "delta ; mu\n"
    assert utils.read_text_argument("delta ; mu") == "delta ; mu"
    assert utils.read_text_argument(str(tmp_path / "missing")) == str(tmp_path / "missing")


def test_count_inversions():
    testdata = [
        [([3, 1, 2], lambda a, b: a > b), 2],
        [([1, 2, 3], lambda a, b: a > b), 0],
        [("HEH", lambda a, b: a == "H" and b != "H"), 1],
        [([], lambda a, b: True), 0],
    ]
    for (values, before), expect in testdata:
        got = utils.count_inversions(values, before)
        assert got == expect, "Values: %s, Expect: %s, Got: %s" % (values, expect, got)


def test_subsets():
    assert list(utils.subsets(["a", "b"])) == [(), ("a",), ("b",), ("a", "b")]
    assert len(list(utils.subsets(range(4)))) == 16


def test_cache_return():
    calls = []

    @utils.cache_return
    def square(x):
        calls.append(x)
        return x * x

    assert square(3) == 9
    assert square(3) == 9
    assert calls == [3]


def test_with_package_resource():
    with utils.with_package_resource("theories/B.theory") as path:
        assert path.exists()
        assert path.is_file()
        assert path.name == "B.theory"

    with pytest.raises(FileNotFoundError):
        with utils.with_package_resource("nonexistent_file.xyz") as _:
            pass

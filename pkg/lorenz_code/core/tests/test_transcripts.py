from pathlib import Path

import pytest

from lorenz_code.cli import run

GOLDEN = Path(__file__).parent / "golden"


@pytest.mark.parametrize(
    ("argv", "transcript"),
    [
        (["hash", "--key", "0000000000000000"], "hash_zero_key.txt"),
        (["keystream", "--key", "0000000000000000", "--blocks", "1"], "keystream_zero_key.txt"),
        (["integrate", "--t", "0", "--prec", "53"], "integrate_at_start.txt"),
    ],
)
def test_stdout_matches_golden_transcript(capsys, argv, transcript):
    assert run(argv) == 0
    assert capsys.readouterr().out == (GOLDEN / transcript).read_text()

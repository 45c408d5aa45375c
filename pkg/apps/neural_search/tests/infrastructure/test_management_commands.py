import json
from io import StringIO

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

TINY_RUN = "GRAPH_SIZE=5\nEPOCHS=1\nBATCHES_PER_EPOCH=1\nBATCH_SIZE=2\nN_STEP=2\nT_TRAIN=4\nPPO_EPOCHS=1\nDIM=16\nN_LAYERS=1\n"


def run(*args):
    out = StringIO()
    call_command(*args, stdout=out)
    return out.getvalue()


def leading_json(output: str) -> dict:
    return json.loads(output[: output.rindex("}") + 1])


@pytest.fixture
def dataset(tmp_path):
    out_dir = tmp_path / "ds"
    run("generate", "--n", "2", "--count", "2", "--seed", "5", "--out", str(out_dir))
    return out_dir


def test_train_then_evaluate(tmp_path, dataset):
    config = tmp_path / "run.env"
    config.write_text(TINY_RUN)
    run_dir = tmp_path / "run"

    trained = leading_json(run("train", "--config", str(config), "--out", str(run_dir), "--quiet"))
    evaluated = leading_json(
        run(
            "eval",
            "--dataset",
            str(dataset),
            "--checkpoint",
            str(run_dir),
            "--steps",
            "3",
            "--out",
            str(tmp_path / "report.json"),
            "--quiet",
        )
    )

    assert trained["epochs_completed"] == 1
    assert evaluated["instances"] == 2
    assert evaluated["total_steps"] == 6
    assert (tmp_path / "report.json").is_file()


def test_eval_with_handcrafted_decoders(dataset):
    output = run(
        "eval",
        "--dataset",
        str(dataset),
        "--removal",
        "random",
        "--reinsertion",
        "eps-greedy",
        "--steps",
        "4",
        "--augment",
        "--quiet",
    )

    summary = leading_json(output)
    assert summary["config"]["reinsertion"] == "eps-greedy"
    assert summary["total_steps"] == 4 * 2 * 2


def test_eval_learned_needs_checkpoint(dataset):
    with pytest.raises(CommandError, match="checkpoint"):
        run("eval", "--dataset", str(dataset), "--steps", "1")


def test_train_rejects_unknown_keys(tmp_path):
    config = tmp_path / "run.env"
    config.write_text("EPOCHZ=3\n")

    with pytest.raises(CommandError, match="EPOCHZ"):
        run("train", "--config", str(config), "--out", str(tmp_path / "run"))

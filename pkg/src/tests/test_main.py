"""
Тестирование консольных команд.
"""

import json

import pytest
from asyncclick.testing import CliRunner

from errors import CountMismatch
from main import EXIT_ACCEPTANCE, EXIT_OPERATIONAL, cli


@pytest.mark.asyncio
class TestCli:
    """
    Тестирование кодов завершения и записи отчетов.
    """

    @pytest.fixture
    def runner(self):
        return CliRunner()

    async def test_widths_table(self, tmp_path, runner):
        result = await runner.invoke(cli, ["--out", str(tmp_path), "--seed", "5", "widths-table", "--pmax", "100"])
        assert result.exit_code == 0, result.output
        assert "Report: widths_table" in result.output
        with open(tmp_path / "widths_table.json", encoding="utf-8") as file:
            data = json.load(file)
        assert data["manifest"]["seed"] == 5
        assert data["manifest"]["config"]["pmax"] == 100
        assert len(data["result"]["widths"]) == 100

    async def test_csv(self, tmp_path, runner):
        out = tmp_path / "values.csv"
        result = await runner.invoke(cli, ["--out", str(out), "--format", "csv", "quantize", "--mu", "0.1", "--m", "2"])
        assert result.exit_code == 0, result.output
        assert out.read_text(encoding="utf-8").splitlines()[0] == "index,symbolic,value"

    async def test_operational_error(self, tmp_path, runner):
        result = await runner.invoke(cli, ["--out", str(tmp_path), "quantize", "--mu", "0.3", "--m", "2"])
        assert result.exit_code == EXIT_OPERATIONAL
        assert not (tmp_path / "quantize.json").exists()

    async def test_acceptance_error(self, mocker, tmp_path, runner):
        mocker.patch("runner.quantization_report", side_effect=CountMismatch("count differs", {"count": 7}))
        result = await runner.invoke(cli, ["--out", str(tmp_path), "quantize", "--mu", "0.1", "--m", "2"])
        assert result.exit_code == EXIT_ACCEPTANCE
        assert "count differs" in result.output

    async def test_bad_list(self, tmp_path, runner):
        result = await runner.invoke(cli, ["--out", str(tmp_path), "minmax1", "--eps-list", "0.1,x"])
        assert result.exit_code != 0
        assert "comma-separated" in result.output

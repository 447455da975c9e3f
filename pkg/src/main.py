"""
Запуск приложения.
"""

import logging
from typing import Any, Awaitable, Callable, Optional

import asyncclick as click
from pydantic import BaseModel

from errors import AcceptanceError, WidthsError
from geodesic_nets.presets import PRESETS
from renderer import Renderer
from runner import Runner
from settings import DEFAULT_SEED, DEFAULT_THREADS, RESULTS_PATH
from writers.models import Report, ReportManifest
from writers.writer import WRITERS

logger = logging.getLogger(__name__)

# коды завершения
EXIT_OPERATIONAL = 1
EXIT_ACCEPTANCE = 2


class CliOptions(BaseModel):
    """
    Общие параметры подкоманд.

    .. code-block::

        CliOptions(
            out="../results",
            fmt="json",
            seed=20240229,
            threads=4,
        )
    """

    out: str
    fmt: str
    seed: int
    threads: int

    class Config:
        allow_mutation = False


def parse_floats(_: Any, __: Any, value: Optional[str]) -> Optional[list[float]]:
    """
    Разбор списка чисел через запятую.

    :param value: Строка вида ``0.1,0.05,0.02``
    :return:
    """

    if value is None:
        return None
    try:
        return [float(item) for item in value.split(",") if item.strip()]
    except ValueError as error:
        raise click.BadParameter(f"expected comma-separated numbers, got {value!r}") from error


async def execute(
    options: CliOptions, command: str, config: dict[str, Any], call: Callable[[Runner], Awaitable[Report]]
) -> None:
    """
    Выполнение подкоманды, запись отчета и вывод сводки.

    :param options: Общие параметры
    :param command: Название подкоманды
    :param config: Параметры подкоманды для манифеста
    :param call: Корутина подкоманды
    :return:
    """

    context = click.get_current_context()
    try:
        report = await call(Runner(seed=options.seed, threads=options.threads))
        manifest = ReportManifest(command=command, seed=options.seed, config={**config, "threads": options.threads})
        path = await WRITERS[options.fmt](options.out).write(report, manifest)
    except AcceptanceError as error:
        logger.error("Acceptance check failed in %s: %s", command, error)
        click.secho(f"Check failed: {error}", fg="red")
        context.exit(EXIT_ACCEPTANCE)
    except WidthsError as error:
        logger.error("Command %s failed: %s", command, error)
        click.secho(f"Error: {error}", fg="red")
        context.exit(EXIT_OPERATIONAL)

    for line in await Renderer(report).render():
        click.secho(line, fg="green")
    click.secho(f"Saved: {path}", fg="green")

    if report.failures:
        for failure in report.failures:
            click.secho(f"Check failed: {failure}", fg="red")
        context.exit(EXIT_ACCEPTANCE)


@click.group()
@click.option("--out", "out", type=str, default=RESULTS_PATH, show_default=True, help="Файл или директория отчета")
@click.option("--format", "fmt", type=click.Choice(sorted(WRITERS)), default="json", show_default=True)
@click.option("--seed", "seed", type=int, default=DEFAULT_SEED, show_default=True, help="Ключ генераторов")
@click.option("--threads", "threads", type=click.IntRange(min=1), default=DEFAULT_THREADS, show_default=True)
@click.pass_context
async def cli(context: click.Context, out: str, fmt: str, seed: int, threads: int) -> None:
    """
    Численная проверка p-ширин двумерной сферы.
    """

    context.obj = CliOptions(out=out, fmt=fmt, seed=seed, threads=threads)


@cli.command("widths-table")
@click.option("--pmax", "p_max", type=click.IntRange(min=1), required=True, help="Наибольший номер ширины")
@click.pass_obj
async def widths_table_command(options: CliOptions, p_max: int) -> None:
    """
    Таблица ω_p = 2π⌊√p⌋.
    """

    await execute(options, "widths-table", {"pmax": p_max}, lambda runner: runner.widths_table(p_max))


@cli.command("quantize")
@click.option("--mu", "mu", type=str, required=True, help="Параметр μ (десятичная или обыкновенная дробь)")
@click.option("--m", "m", type=click.IntRange(min=1), required=True, help="Количество слоев")
@click.pass_obj
async def quantize_command(options: CliOptions, mu: str, m: int) -> None:
    """
    Значения решетки длин и проверка (m + 1)² − 1.
    """

    await execute(options, "quantize", {"mu": mu, "m": m}, lambda runner: runner.quantize(mu, m))


@cli.command("crofton")
@click.option("--k", "k", type=click.IntRange(1, 6), required=True, help="Степень многочленов")
@click.option("--trials", "trials", type=click.IntRange(min=1), default=50, show_default=True)
@click.option("--samples", "n_samples", type=click.IntRange(min=100), default=100_000, show_default=True)
@click.pass_obj
async def crofton_command(options: CliOptions, k: int, trials: int, n_samples: int) -> None:
    """
    Проверка границы sup M ≤ 2πk по формуле Крофтона.
    """

    config = {"k": k, "trials": trials, "samples": n_samples}
    await execute(options, "crofton", config, lambda runner: runner.crofton(k, trials, n_samples))


@cli.command("minmax1")
@click.option("--eps-list", "eps_list", callback=parse_floats, default="0.1,0.05,0.02", show_default=True)
@click.option("--grid", "size", type=click.IntRange(min=1024), default=4096, show_default=True)
@click.pass_obj
async def minmax1_command(options: CliOptions, eps_list: list[float], size: int) -> None:
    """
    Масса осесимметричных решений на S² при ε → 0.
    """

    config = {"eps_list": eps_list, "grid": size}
    await execute(options, "minmax1", config, lambda runner: runner.minmax1(eps_list, size))


@cli.command("glue")
@click.option("--dirs", "angles", callback=parse_floats, required=True, help="Направления концов в градусах")
@click.option("--eps", "eps", type=float, default=1.0, show_default=True)
@click.option("--L", "half_width", type=float, default=25.0, show_default=True, help="Полуширина квадрата")
@click.option("--grid", "size", type=click.IntRange(min=8), default=256, show_default=True)
@click.pass_obj
async def glue_command(options: CliOptions, angles: list[float], eps: float, half_width: float, size: int) -> None:
    """
    Склейка гетероклиник вдоль лучей и релаксация.
    """

    config = {"dirs": angles, "eps": eps, "L": half_width, "grid": size}
    await execute(options, "glue", config, lambda runner: runner.glue(angles, eps, half_width, size))


@cli.command("scatter")
@click.option("--field", "path", type=str, required=True, help="Выгрузка поля подкомандой glue")
@click.option("--thetas", "n_theta", type=click.IntRange(min=8), default=512, show_default=True)
@click.pass_obj
async def scatter_command(options: CliOptions, path: str, n_theta: int) -> None:
    """
    Данные рассеяния и антиподальное сопоставление концов.
    """

    await execute(options, "scatter", {"field": path, "thetas": n_theta}, lambda runner: runner.scatter(path, n_theta))


@cli.command("nets")
@click.option("--surface", "surface", type=str, default='{"kind": "RoundSphere", "params": []}', show_default=True)
@click.option("--preset", "preset", type=click.Choice(PRESETS), required=True)
@click.option("--Q", "q", type=click.IntRange(min=1), default=8, show_default=True, help="Число подразбиений")
@click.option("--relax/--no-relax", "relax", default=False, show_default=True)
@click.pass_obj
async def nets_command(options: CliOptions, surface: str, preset: str, q: int, relax: bool) -> None:
    """
    Стационарность и ядро оператора Якоби геодезической сети.
    """

    config = {"surface": surface, "preset": preset, "Q": q, "relax": relax}
    await execute(options, "nets", config, lambda runner: runner.nets(surface, preset, q, relax))


@cli.command("ellipsoid-tune")
@click.option("--mu", "mu", type=click.FloatRange(0.0, 0.1), required=True, help="Приращение длин μ")
@click.pass_obj
async def ellipsoid_tune_command(options: CliOptions, mu: float) -> None:
    """
    Эллипсоид с длинами главных геодезических (2π, 2π + μ, 2π + 2μ).
    """

    await execute(options, "ellipsoid-tune", {"mu": mu}, lambda runner: runner.ellipsoid_tune(mu))


if __name__ == "__main__":
    # запуск обработки команды
    # pylint: disable=E1120
    cli(_anyio_backend="asyncio")

"""
Выполнение подкоманд: вычисления в пуле потоков и формирование отчетов.
"""

import json
import logging
from typing import Any, Callable, Optional, Sequence, TypeVar

import anyio
import anyio.to_thread
import numpy as np

from crofton_sweepout.sweepout import crofton_length, mass_bound_report, random_trial_polynomial
from errors import InvalidInput
from geodesic_nets.jacobi import jacobi_operator, kernel_dimension
from geodesic_nets.presets import preset_net
from geodesic_nets.relax import relax_to_stationary
from geodesic_nets.stationarity import stationarity_residual
from logger import traced
from phase_field.axisymmetric import solve_axisymmetric
from phase_field.energy import energy, varifold_mass
from phase_field.models import MinMaxRow
from phase_field.planar import relax_glued_kinks
from reader import Reader
from settings import DEFAULT_SEED, DEFAULT_THREADS
from sg_scattering.ends import angle_between, verify_antipodal_pairing
from sg_scattering.fields import ShiftedField
from sg_scattering.spectrum import circle_thetas, refine_bound_states, sample_circle
from surface_geometry.ellipsoid import closed_geodesic_monodromy, semi_axis_length_jacobian, tune_ellipsoid
from surface_geometry.surfaces import surface_from_dict
from widths.lattice import quantization_report
from widths.table import width_table
from writers.models import Report

logger = logging.getLogger(__name__)

T = TypeVar("T")

# допуск антиподального сопоставления направлений, в градусах
PAIRING_TOL_DEG = 5.0


def minmax_row(eps: float, size: int) -> MinMaxRow:
    """
    Осесимметричное решение на S² и его масса варифолда.

    :param eps: Параметр ε
    :param size: Количество ячеек по широте
    :return:
    """

    state = solve_axisymmetric(eps, size)
    return MinMaxRow(
        eps=eps,
        energy=energy(state),
        mass=varifold_mass(state),
        index=state.index,
        residual=state.residual,
    )


def net_report(surface: dict[str, Any], preset: str, q: int, relax: bool) -> dict[str, Any]:
    """
    Сеть из набора заготовок: релаксация, невязка и размерность ядра оператора Якоби.

    :param surface: Поверхность в виде {kind, params}
    :param preset: Название заготовки
    :param q: Число подразбиений Q
    :param relax: Релаксировать сеть перед анализом
    :return:
    """

    net = preset_net(surface_from_dict(surface), preset, q)
    if relax:
        net = relax_to_stationary(net)
    operator = jacobi_operator(net)
    report = net.to_report(residual=stationarity_residual(net).max_norm, kernel_dim=kernel_dimension(operator))
    return {**report.dict(), "jacobi_deviation": operator.deviation}


def ellipsoid_report(mu: float) -> dict[str, Any]:
    """
    Подбор эллипсоида и невырожденность его главных геодезических по следу монодромии.

    :param mu: Приращение длин μ
    :return:
    """

    tuned = tune_ellipsoid(mu)
    traces = [float(np.trace(closed_geodesic_monodromy(np.array(tuned.coefficients), index))) for index in range(3)]
    return {
        **tuned.dict(),
        "semi_axes": list(tuned.semi_axes),
        "monodromy_traces": traces,
        "nondegenerate": [abs(trace - 2.0) > 1e-8 for trace in traces],
        "length_jacobian_at_sphere": semi_axis_length_jacobian(np.ones(3)).tolist(),
    }


class Runner:
    """
    Выполнение подкоманд с ограничением количества рабочих потоков.
    """

    def __init__(self, seed: int = DEFAULT_SEED, threads: int = DEFAULT_THREADS) -> None:
        """
        Конструктор.

        :param seed: Ключ счетчиковых генераторов
        :param threads: Количество рабочих потоков
        """

        if threads < 1:
            raise InvalidInput("at least one worker thread is required", {"threads": threads})
        self.seed = seed
        self.threads = threads
        self._limiter: Optional[anyio.CapacityLimiter] = None

    async def run(self, func: Callable[..., T], *args: Any) -> T:
        """
        Выполнение функции в пуле потоков.

        :param func: Функция
        :param args: Аргументы
        :return:
        """

        if self._limiter is None:
            self._limiter = anyio.CapacityLimiter(self.threads)
        return await anyio.to_thread.run_sync(func, *args, limiter=self._limiter)

    async def gather(self, calls: Sequence[tuple[Callable[..., T], tuple[Any, ...]]]) -> list[T]:
        """
        Параллельное выполнение независимых вызовов в группе задач; порядок результатов сохраняется.

        :param calls: Пары (функция, аргументы)
        :return:
        """

        results: dict[int, T] = {}

        async def run_one(index: int, func: Callable[..., T], args: tuple[Any, ...]) -> None:
            results[index] = await self.run(func, *args)

        async with anyio.create_task_group() as group:
            for index, (func, args) in enumerate(calls):
                group.start_soon(run_one, index, func, args)

        return [results[index] for index in range(len(calls))]

    async def widths_table(self, p_max: int) -> Report:
        table = await self.run(width_table, p_max)
        rows = table.rows()
        return Report(
            name="widths_table",
            payload={"p_max": p_max, "widths": rows, "pinches": [item.row() for item in table.pinches]},
            rows=rows,
        )

    async def quantize(self, mu: str, m: int) -> Report:
        report = await self.run(quantization_report, mu, m)
        rows = report.rows()
        return Report(
            name="quantize",
            payload={
                "mu": str(report.mu),
                "m": m,
                "count": report.count,
                "expected": report.expected,
                "strata": report.strata,
                "values": rows,
            },
            rows=rows,
        )

    @traced("crofton")
    async def crofton(self, k: int, trials: int, n_samples: int) -> Report:
        """
        Проверка sup M ≤ 2πk: испытания выполняются параллельно, испытание t использует
        многочлен из потока (seed, t) и полюса с ключом seed + t + 1.

        :param k: Степень
        :param trials: Количество испытаний
        :param n_samples: Объем выборки в испытании
        :return:
        """

        if not 1 <= k <= 6:
            raise InvalidInput("k must lie in [1, 6]", {"k": k})
        calls = [
            (crofton_length, (random_trial_polynomial(k, self.seed, trial), n_samples, self.seed + trial + 1))
            for trial in range(trials)
        ]
        report = mass_bound_report(k, await self.gather(calls))
        rows = [
            {"trial": index, **item.dict(exclude={"exhausted"}), "exhausted": len(item.exhausted)}
            for index, item in enumerate(report.per_trial)
        ]
        return Report(
            name="crofton",
            payload={
                "k": k,
                "trials": trials,
                "per_trial": [
                    {"length_mean": item.length_mean, "std_error": item.std_error} for item in report.per_trial
                ],
                "max": report.max,
                "max_std_error": report.max_std_error,
                "bound": report.bound,
            },
            rows=rows,
        )

    @traced("minmax1")
    async def minmax1(self, eps_list: Sequence[float], size: int) -> Report:
        rows = await self.gather([(minmax_row, (eps, size)) for eps in sorted(eps_list, reverse=True)])
        masses = [row.mass for row in rows]
        return Report(
            name="mass_vs_eps",
            payload={
                "rows": [row.dict() for row in rows],
                "monotone": all(first < second for first, second in zip(masses, masses[1:])),
                "target": 2 * np.pi,
            },
            rows=[row.dict() for row in rows],
        )

    @traced("glue")
    async def glue(self, angles_deg: Sequence[float], eps: float, half_width: float, size: int) -> Report:
        """
        Склейка гетероклиник вдоль лучей и выгрузка поля в сдвинутой форме.

        :param angles_deg: Направления концов в градусах
        :param eps: Параметр ε
        :param half_width: Полуширина квадрата L
        :param size: Количество узлов по стороне
        :return:
        """

        directions = [(float(np.cos(np.deg2rad(angle))), float(np.sin(np.deg2rad(angle)))) for angle in angles_deg]
        state = await self.run(relax_glued_kinks, directions, half_width, eps, size)
        field = ShiftedField.from_normalized(state, directions)
        x, y = state.mesh()
        return Report(
            name="field",
            payload={**field.to_dict(), "eps": eps, "residual": state.residual, "iterations": state.iterations},
            rows=[
                {"x": float(px), "y": float(py), "u": float(value)}
                for px, py, value in zip(x.ravel(), y.ravel(), field.values.ravel())
            ],
        )

    @traced("scatter")
    async def scatter(self, path: str, n_theta: int, tol_deg: float = PAIRING_TOL_DEG) -> Report:
        """
        Данные рассеяния поля из файла: выборка a(λ) частями по потокам, связанные состояния
        и антиподальное сопоставление направлений.

        :param path: Путь к выгрузке поля
        :param n_theta: Количество точек выборки на окружности
        :param tol_deg: Допуск сопоставления в градусах
        :return:
        """

        field = await Reader().read_field(path)
        chunks = [chunk for chunk in np.array_split(circle_thetas(n_theta), self.threads) if chunk.size]
        parts = await self.gather([(sample_circle, (field, chunk.tolist())) for chunk in chunks])
        data = await self.run(refine_bound_states, field, [sample for part in parts for sample in part])

        failures = []
        antipodal = False
        if data.directions:
            pairing = verify_antipodal_pairing(data.directions, tol_deg)
            antipodal = pairing.paired
            if not antipodal:
                failures.append(f"directions are not antipodally paired: unmatched {pairing.unmatched}")
        ends_matched = all(
            any(angle_between(end, direction) <= tol_deg for direction in data.directions) for end in field.ends
        )
        if field.ends and not ends_matched:
            failures.append("scattering directions do not match the geometric ends")

        report = data.to_report()
        return Report(
            name="scattering",
            payload={**report, "antipodal": antipodal, "ends_matched": ends_matched},
            rows=report["samples"],
            failures=failures,
        )

    @traced("nets")
    async def nets(self, surface: str, preset: str, q: int, relax: bool) -> Report:
        try:
            description = json.loads(surface)
        except json.JSONDecodeError as error:
            raise InvalidInput("surface must be a JSON object {kind, params}", {"surface": surface}) from error
        payload = await self.run(net_report, description, preset, q, relax)
        rows = [{"vertex": index, **dict(zip("xyz", point))} for index, point in enumerate(payload["vertex_positions"])]
        return Report(name="net", payload=payload, rows=rows)

    async def ellipsoid_tune(self, mu: float) -> Report:
        payload = await self.run(ellipsoid_report, mu)
        rows = [
            {"index": index + 1, "length": length, "trace": trace, "nondegenerate": flag}
            for index, (length, trace, flag) in enumerate(
                zip(payload["lengths"]["ell"], payload["monodromy_traces"], payload["nondegenerate"])
            )
        ]
        return Report(name="ellipsoid", payload=payload, rows=rows)

#!/usr/bin/env python
"""
Точные разложения Фурье–Якоби и произведения Борчердса.

Использование:
    python app.py expand   --config configs/j744_rank0.toml          — Ψ_k через Θ_{a,n}
    python app.py product  --config configs/j744_rank0.toml          — Ψ_k через произведение
    python app.py i0       --config configs/gn_phi01.toml            — показатель I₀
    python app.py theta-an --config configs/gn_phi01.toml            — ряд Θ_{a,n}
    python app.py psi0     --config configs/gn_phi01.toml            — Ψ₀ и фаза
    python app.py weyl     --config configs/leech_type.toml          — вектор Вейля и сравнение
    python app.py check    --config configs/gn_phi01.toml            — набор проверок тождеств

Коды завершения: 0 — успех, 1 — нарушено тождество или внутренняя ошибка,
2 — ошибка задания, формы или решётки.
"""

import argparse
import logging
import sys
from pathlib import Path

logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    handlers=[logging.StreamHandler(sys.stderr)],
)
logger = logging.getLogger(__name__)


def main() -> None:
    from borcherds import ConsistencyError
    from cli import COMMANDS, ConfigError, load_config, run
    from lattice import LatticeError
    from modforms import CoefficientRangeError, FormValidationError

    parser = argparse.ArgumentParser(description="Точные разложения Фурье–Якоби форм Борчердса")
    parser.add_argument("command", choices=sorted(COMMANDS), help="Команда")
    parser.add_argument("--config", type=str, required=True, help="Путь к заданию (.toml или .json)")
    parser.add_argument("--format", choices=["json", "text"], default="json", help="Формат вывода")
    parser.add_argument("--grades", type=int, default=None, help="Наибольшая степень q₂ (K)")
    parser.add_argument("--q1-order", type=str, default=None, help="Порядок по q₁, например 5 или 9/2")
    args = parser.parse_args()

    try:
        config = load_config(Path(args.config), grades=args.grades, q1_order=args.q1_order)
        code, report = run(args.command, config, args.format)
    except FileNotFoundError as e:
        logger.error(f"Файл не найден: {e}")
        sys.exit(2)
    except FormValidationError as e:
        logger.error(f"Некорректная форма:\n{e}")
        sys.exit(2)
    except (ConfigError, LatticeError, CoefficientRangeError) as e:
        logger.error(f"Ошибка задания: {e}")
        sys.exit(2)
    except ConsistencyError as e:
        logger.error(f"Нарушено тождество: {e}")
        sys.exit(1)
    except Exception as e:
        logger.error(f"Ошибка при вычислении: {e}", exc_info=True)
        sys.exit(1)

    print(report, file=sys.stdout)
    sys.exit(code)


if __name__ == "__main__":
    main()

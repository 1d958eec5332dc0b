"""
System Information
Host and engine details shown in the banner of a text-format run
"""

import platform
from typing import Any, Dict, Optional

import psutil
import sympy


def gather_system_info() -> Dict[str, Any]:
    """Gather host figures that bound how far a search can go"""
    try:
        memory = psutil.virtual_memory()
        return {
            "python": platform.python_version(),
            "os": f"{platform.system()} {platform.release()}",
            "sympy": sympy.__version__,
            "cpu_logical": psutil.cpu_count(),
            "cpu_physical": psutil.cpu_count(logical=False),
            "memory_total": round(memory.total / (1024 ** 3), 1),
            "memory_free": round(memory.available / (1024 ** 3), 1),
        }
    except Exception as e:
        return {"error": str(e)}


def format_system_info(info: Dict[str, Any], engine: Optional[Dict[str, Any]] = None) -> str:
    if "error" in info:
        return f"Error gathering system info: {info['error']}"

    physical = info.get("cpu_physical") or "?"
    lines = [
        f"Python {info['python']} on {info['os']} (sympy {info['sympy']})",
        f"CPU: {physical} cores / {info['cpu_logical']} threads",
        f"RAM: {info['memory_free']:.1f}GB free / {info['memory_total']:.1f}GB total",
    ]
    if engine:
        lines.append(
            f"Engine: threshold {engine['threshold']} | jobs {engine['jobs']} | "
            f"seed {engine['seed']} | budget {engine['budget']} | "
            f"heuristic {'on' if engine['heuristic'] else 'off'}"
        )
    return "\n".join(lines)

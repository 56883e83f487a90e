#!/usr/bin/env python3
"""
Bootstrap a development environment for poset-scaffolds.

Creates the virtual environment, installs requirements.txt, writes .env from
.env.example, creates the benchmark directory named by SCAFFOLDS_BENCH_DIR and
optionally runs the fast or full test suite inside the new environment.
"""

import argparse
import os
import subprocess
import sys
from pathlib import Path

ENV_DIR = Path("scaffolds-env")


def venv_executable(name: str) -> Path:
    if sys.platform == "win32":
        return ENV_DIR / "Scripts" / f"{name}.exe"
    return ENV_DIR / "bin" / name


def step(args, description: str) -> bool:
    """Run one bootstrap step; report failure without aborting the caller."""
    print(f"🔄 {description}...")
    result = subprocess.run([str(a) for a in args], capture_output=True, text=True)
    if result.returncode != 0:
        print(f"❌ {description} failed:\n{result.stderr or result.stdout}")
        return False
    print(f"✅ {description} completed")
    return True


def read_env_file(path: Path) -> dict:
    values = {}
    if not path.exists():
        return values
    for line in path.read_text().splitlines():
        key, sep, value = line.partition("=")
        if sep and not key.strip().startswith("#"):
            values[key.strip()] = value.strip()
    return values


def bench_dir() -> Path:
    configured = os.environ.get("SCAFFOLDS_BENCH_DIR") or read_env_file(Path(".env")).get("SCAFFOLDS_BENCH_DIR")
    return Path(configured or "bench")


def setup_environment(tests: str) -> int:
    print("🚀 Setting up poset-scaffolds")
    print("=" * 50)

    if sys.version_info < (3, 9):
        print("❌ Python 3.9 or higher is required")
        return 1
    print(f"✅ Python {sys.version.split()[0]} detected")

    if not ENV_DIR.exists() and not step([sys.executable, "-m", "venv", ENV_DIR], "Creating virtual environment"):
        return 1
    python = venv_executable("python")
    if not step([python, "-m", "pip", "install", "-r", "requirements.txt"], "Installing dependencies"):
        print(f"   Retry by hand: {python} -m pip install -r requirements.txt")
        return 1

    if not Path(".env").exists() and Path(".env.example").exists():
        Path(".env").write_text(Path(".env.example").read_text())
        print("📝 Created .env from .env.example")

    bench = bench_dir()
    bench.mkdir(parents=True, exist_ok=True)
    print(f"📁 Benchmark CSVs go to {bench}")

    if tests != "none":
        selection = ["-m", "not slow"] if tests == "fast" else []
        if not step([python, "-m", "pytest", "-q", *selection], f"Running the {tests} test suite"):
            return 1

    print("\n🎉 Setup completed!")
    activate = ENV_DIR / "Scripts" / "activate" if sys.platform == "win32" else ENV_DIR / "bin" / "activate"
    print(f"Activate with: source {activate}")
    print("Try: python main.py scaffold --hasse fixtures/fig1.poset")
    return 0


def main() -> int:
    parser = argparse.ArgumentParser(description="Bootstrap the poset-scaffolds environment")
    parser.add_argument(
        "--tests",
        choices=("none", "fast", "full"),
        default="fast",
        help="test suite to run after installing (full includes the slow acceptance runs)",
    )
    return setup_environment(parser.parse_args().tests)


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Test runner for harmonica: suites, lint and type checks in one pass."""

import argparse
import os
import subprocess
import sys
import time

# suite -> (path, extra pytest arguments)
SUITES = {
    "unit": ("tests/unit/", []),
    "integration": ("tests/integration/", []),
    "system": ("tests/system/", []),
    "security": ("tests/security/", []),
    "performance": ("tests/performance/", ["-m", "benchmark", "--benchmark-only"]),
}

DEFAULT_SUITES = ("unit", "integration", "system", "security")


def run_command(cmd, description, env=None):
    """Run one command, print a pass/fail line and the output on failure."""
    print(f"\n{'=' * 60}\n{description}: {' '.join(cmd)}\n{'=' * 60}")
    start_time = time.time()
    result = subprocess.run(cmd, capture_output=True, text=True, env=env)
    duration = time.time() - start_time

    if result.returncode == 0:
        print(f"✅ {description} passed in {duration:.2f}s")
    else:
        print(f"❌ {description} failed (exit {result.returncode})")
        print("STDOUT:", result.stdout)
        print("STDERR:", result.stderr)
    return result.returncode == 0


def pytest_command(suite, args):
    path, extra = SUITES[suite]
    cmd = ["pytest", path, *extra]
    if suite == "performance":
        return cmd
    if args.quick:
        cmd.extend(["-m", "not slow"])
    if args.coverage:
        cmd.extend(["--cov=src", "--cov-append", "--cov-report="])
    return cmd


def suite_environment(args):
    """Environment for pytest: hypothesis profile and sampling seed"""
    env = dict(os.environ)
    env["HARMONICA_HYPOTHESIS_PROFILE"] = "harmonica-quick" if args.quick else "harmonica"
    if args.seed is not None:
        env["HARMONICA_SEED"] = str(args.seed)
    return env


def main():
    parser = argparse.ArgumentParser(description="Run the harmonica test suites")
    parser.add_argument(
        "--suite",
        action="append",
        choices=sorted(SUITES),
        help="Suite to run (repeatable; default: every suite but performance)",
    )
    parser.add_argument("--quick", action="store_true",
                        help="Deselect slow tests and run fewer hypothesis examples")
    parser.add_argument("--seed", type=int, help="Sampling seed exported as HARMONICA_SEED")
    parser.add_argument("--coverage", action="store_true", help="Collect coverage over src/")
    parser.add_argument("--lint", action="store_true", help="Run black and flake8")
    parser.add_argument("--type-check", action="store_true", help="Run mypy over src/")
    args = parser.parse_args()

    suites = args.suite or list(DEFAULT_SUITES)
    env = suite_environment(args)
    success = True

    if args.lint:
        success &= run_command(["black", "--check", "src/", "tests/"], "Black formatting")
        success &= run_command(["flake8", "src/", "tests/"], "Flake8")
    if args.type_check:
        success &= run_command(["mypy", "src/", "--ignore-missing-imports"], "MyPy")

    if args.coverage:
        run_command(["coverage", "erase"], "Reset coverage data")
    for suite in suites:
        success &= run_command(pytest_command(suite, args), f"{suite.capitalize()} tests", env)

    if args.coverage:
        run_command(["coverage", "report", "--show-missing"], "Coverage summary")

    print("\n" + "=" * 60)
    if not success:
        print("❌ Some checks failed. See the output above.")
        sys.exit(1)
    print(f"✅ {', '.join(suites)} passed")


if __name__ == "__main__":
    main()

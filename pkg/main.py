"""
polycalc command line entry point.

    python main.py poly convert --in square.json
    python main.py check roundtrip --seed 0
"""
from polycalc.cli import main

if __name__ == "__main__":
    main()

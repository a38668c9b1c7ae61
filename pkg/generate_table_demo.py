#!/usr/bin/env python3
"""
Compute the d_m(gl_n) table using the repdensity run configuration
"""

import sys
from pathlib import Path

# Add the current directory to Python path
sys.path.insert(0, str(Path(__file__).parent))


def main(config_path: str = "config/quick.yaml") -> bool:
    """Load a run configuration, fill the table, check every entry against its bounds"""
    print("Generating d_m(gl_n) table")
    print("=" * 50)

    try:
        from repdensity import AlgebraId, BoundChecker, DensityEngine, RunConfig
        from repdensity.cli.render import OutputRecord, render_table_markdown
        from repdensity.root_systems import algebra_variant

        print(f"Loading run configuration: {config_path}")
        config = RunConfig(config_path)
        print(f"+ {config!r}")

        engine = DensityEngine(config.engine)
        checker = BoundChecker()
        ranks = list(range(1, config.table.nmax + 1))

        records = []
        violations = 0
        for m in config.table.m:
            for n in ranks:
                result = engine.density(AlgebraId.gl(n), m)
                report = checker.check(algebra_variant(AlgebraId.gl(n)), result)
                violations += not report.satisfied
                records.append(OutputRecord(result, report))
                print(f"  {result}  ({result.decimal()}, {result.points} points)")

        print()
        print(render_table_markdown(records, ranks, list(config.table.m)))
        print(f"+ Bound checks: {len(records) - violations} of {len(records)} hold")
        return violations == 0

    except Exception as e:
        print(f"ERROR: Error generating table: {e}")
        import traceback
        traceback.print_exc()
        return False


if __name__ == "__main__":
    success = main(*sys.argv[1:2])
    if success:
        print("\nSUCCESS: table generation completed successfully!")
    else:
        print("\nFAILED: table generation failed. Check the error messages above.")
        sys.exit(1)

"""Solve an LP file with HiGHS and compare the optimum to an expected value."""
import sys

import highspy


def main() -> int:
    path, expected = sys.argv[1], float(sys.argv[2])
    h = highspy.Highs()
    h.setOptionValue("output_flag", False)
    h.readModel(path)
    h.run()
    if h.getModelStatus() != highspy.HighsModelStatus.kOptimal:
        print("not optimal:", h.modelStatusToString(h.getModelStatus()))
        return 1
    value = h.getInfo().objective_function_value
    print(f"objective {value:.6f}, expected {expected:.6f}")
    return 0 if abs(value - expected) < 1e-6 else 1


if __name__ == "__main__":
    sys.exit(main())

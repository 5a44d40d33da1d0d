"""Print the right-braiding axioms and their duals, the left-braiding axioms
that the checker uses."""

from skewact.coherence import LEFT_BRAIDING_AXIOMS, RIGHT_BRAIDING_AXIOMS, render_axioms


def main():
    print("right braiding")
    print(render_axioms(RIGHT_BRAIDING_AXIOMS))
    print()
    print("left braiding (dual: reverse every arrow, swap tensor arguments)")
    print(render_axioms(LEFT_BRAIDING_AXIOMS))


if __name__ == "__main__":
    main()

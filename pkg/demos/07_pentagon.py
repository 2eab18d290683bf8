"""The pentagon game: five integers with positive sum always settle.

Firing a negative vertex adds it to both neighbours and flips its sign.
This is the numbers game on a five-cycle with unit coefficients, fired
greedily at the lowest negative index.
"""
import random

from coxkit import imo_pentagon_run

record = imo_pentagon_run([-3, 1, 4, -2, 2])
print("start:", record.start)
for v, position in zip(record.fired, record.positions[1:]):
    print(f"  fire {v} -> {position}")
print("terminated after", record.steps, "firings at", record.final)

rng = random.Random(2024)
longest = (0, None)
total = 0
for _ in range(1000):
    while True:
        start = [rng.randint(-9, 9) for _ in range(5)]
        if sum(start) > 0:
            break
    run = imo_pentagon_run(start, record=False)
    assert run.terminated
    total += run.steps
    if run.steps > longest[0]:
        longest = (run.steps, start)

print("\n1000 random games, all terminated")
print("average firings:", total / 1000)
print("longest game:", longest[0], "firings from", longest[1])

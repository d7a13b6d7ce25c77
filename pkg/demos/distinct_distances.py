"""
Few distinct point-line distances
---------------------------------

n horizontal lines y = 1..n and points on the middle line y = (n+1)/2.
Every point sees the same symmetric set of distances, so the census is
ceil(n/2) no matter how many points there are. Random rational scenes sit
far above that.
"""
from distlab.census import distinct_point_line_distances
from distlab.configurations import GeneratorSpec, generate, random_scene
from distlab.experiment import run_experiment
from distlab.kernel import format_rational

for n in (4, 9, 50):
    scene = generate(GeneratorSpec("ParallelMedian", {"n": n, "m": 6}))
    census = distinct_point_line_distances(scene.points2, scene.lines2)
    print(f"ParallelMedian n={n:3d}: {census.size} distinct squared distances, "
          f"designed {scene.metadata['designed_distinct_distances']}")

print("keys for n=50 (squared distances):", ", ".join(format_rational(k) for k in sorted(census.keys)[:6]), "...")

# the census grows linearly in n, the fit sees slope 1
report = run_experiment("ParallelMedian", {"n": [16, 32, 64, 128, 256]}, "ceil_half_n", fixed={"m": 3})
print(report.to_csv(), end="")
print("fitted exponent in n: %.4f" % report.fitted_exponents["n"][0])

scene = random_scene(seed=1, m=30, n=30)
census = distinct_point_line_distances(scene.points2, scene.lines2)
print(f"random 30x30 scene: {census.size} distinct distances out of {30 * 30} pairs")

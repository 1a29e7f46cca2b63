import pyperf

import pyminshare as ps


def run_table(t, k, n):
    return ps.shamir_distribution_table(t, k, n)


def run_epsilon(params, order):
    return ps.epsilon_security(params.joint_distribution(), params.access_structure(), order)


def run_sample_stack(params, key, num):
    return ps.shamir_sample_stack(params, key, num)


runner = pyperf.Runner(loops=2)

runner.warmups = 2  # Number of warm-up runs
runner.samples = 2  # Number of benchmark runs


for t, k, n in [(5, 2, 3), (7, 3, 4), (11, 3, 5)]:
    runner.bench_func(f"table/{t}/{k}/{n}", lambda: run_table(t, k, n))


for order in ["1/2", "2", "inf"]:
    xor_params = ps.XorParams.create(8, "3/4")
    runner.bench_func(f"epsilon/xor/8/{order}", lambda: run_epsilon(xor_params, order))

    cumulative_params = ps.CumulativeParams.create(ps.threshold_structure(3, 5), "3/4")
    runner.bench_func(
        f"epsilon/cumulative/3-of-5/{order}", lambda: run_epsilon(cumulative_params, order)
    )


for num in [10000]:
    shamir_params = ps.ShamirParams.create(7, 3, 4, "9/10")
    key = ps.key_from_seed(0)
    runner.bench_func(
        f"sample_stack/7/3/4/{num}", lambda: run_sample_stack(shamir_params, key, num)
    )

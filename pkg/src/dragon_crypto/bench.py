"""Wall-clock timing of full encrypt+decrypt cycles against plaintext length."""
from __future__ import annotations

import csv
import gc
import random
import statistics
import string
import time
from dataclasses import dataclass

from .cipher import decrypt_text, encrypt_text, generate_key
from .codec import PrivateKey

# printable characters on a standard US keyboard: 95 symbols, space included
KEYBOARD = string.digits + string.ascii_letters + string.punctuation + " "

TABLE_LENGTHS = (26, 1066, 2106, 3146, 4186, 5226, 6266)
BENCH_SEED = 2020


@dataclass(frozen=True)
class BenchRecord:
    plaintext_length: int
    cycle_seconds: float


def bench_key(seed: int = BENCH_SEED) -> PrivateKey:
    return generate_key(32, iterations=32, size=5, angle_deg=37, seed=seed)


def keyboard_text(length: int, rng: random.Random) -> str:
    return "".join(rng.choices(KEYBOARD, k=length))


def time_cycle(text: str, key: PrivateKey) -> float:
    start = time.perf_counter()
    recovered = decrypt_text(encrypt_text(text, key), key)
    elapsed = time.perf_counter() - start
    if recovered != text:
        raise AssertionError(f"roundtrip mismatch at length {len(text)}")
    return elapsed


def run_bench(lengths, trials: int = 5, key: PrivateKey | None = None, seed: int = BENCH_SEED) -> list[BenchRecord]:
    """Median cycle time per length. Single-threaded; GC paused while timing."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    key = key or bench_key(seed)
    rng = random.Random(seed)
    records = []
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        for length in lengths:
            texts = [keyboard_text(length, rng) for _ in range(trials)]
            times = [time_cycle(t, key) for t in texts]
            records.append(BenchRecord(length, statistics.median(times)))
            gc.collect()
    finally:
        if gc_was_enabled:
            gc.enable()
    return records


def write_csv(records: list[BenchRecord], fh) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["plaintext_length", "cycle_seconds"])
    for r in records:
        writer.writerow([r.plaintext_length, f"{r.cycle_seconds:.9g}"])

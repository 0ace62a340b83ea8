from hypothesis import settings

# first calls into compiled kernels pay the JIT cost; no per-example deadlines
settings.register_profile("nct", deadline=None)
settings.load_profile("nct")

from hypothesis import settings

settings.register_profile("jcpair", deadline=None, max_examples=150, derandomize=True)
settings.load_profile("jcpair")

import functools
import hashlib
import inspect
import os
import pickle
from typing import Callable, Iterable

from loguru import logger

from circpeak.utils.config import get_settings

MAX_DEPTH = 6


def recursive_hash(value, depth=0):
    """Hash primitives recursively with maximum depth."""
    if depth > MAX_DEPTH:
        return hashlib.md5("max_depth_reached".encode()).hexdigest()

    if isinstance(value, (int, str, bool, bytes)):
        return hashlib.md5(f"{type(value).__name__}:{value}".encode()).hexdigest()
    elif isinstance(value, (list, tuple, frozenset)):
        items = sorted(value) if isinstance(value, frozenset) else value
        return hashlib.md5("".join([recursive_hash(item, depth + 1) for item in items]).encode()).hexdigest()
    elif isinstance(value, dict):
        return hashlib.md5(
            "".join(
                [recursive_hash(key, depth + 1) + recursive_hash(val, depth + 1) for key, val in sorted(value.items())]
            ).encode()
        ).hexdigest()
    else:
        return hashlib.md5("unknown".encode()).hexdigest()


def hash_code(code):
    return hashlib.md5(code.encode()).hexdigest()


def file_cache(depends_on: Iterable[Callable] = ()):
    """Decorator to cache a function's pickled output on disk, keyed by its inputs and source code.

    The source of every function in `depends_on` joins the key, so editing a helper the
    cached function calls invalidates its old pickles too. The cache directory and the
    on/off switch are read from the settings on every call.
    """

    def decorator(func):
        source_hash = hash_code("".join(inspect.getsource(f) for f in (func, *depends_on)))
        args_names = func.__code__.co_varnames[: func.__code__.co_argcount]

        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            settings = get_settings()
            if settings.disable_cache:
                return func(*args, **kwargs)

            cache_dir = settings.cache_dir
            os.makedirs(cache_dir, exist_ok=True)

            args_dict = dict(zip(args_names, args))
            arg_hash = hash_code(recursive_hash(args_dict) + recursive_hash(kwargs) + source_hash)
            cache_file = os.path.join(cache_dir, f"{func.__module__}_{func.__name__}_{arg_hash}.pickle")

            try:
                if os.path.exists(cache_file):
                    logger.debug(f"Used cache for function: {func.__name__}")
                    with open(cache_file, "rb") as f:
                        return pickle.load(f)
            except Exception:
                logger.info("Unpickling failed")

            result = func(*args, **kwargs)
            try:
                with open(cache_file, "wb") as f:
                    pickle.dump(result, f)
            except Exception as e:
                logger.info(f"Pickling failed: {e}")
            return result

        return wrapper

    return decorator

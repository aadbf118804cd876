"""
input_output - parsers, JSON forms and the memo cache file.
"""
from .memo_cache_file import MemoCacheFile
from .serialization import dumps, to_dict
from .weight_parser import parse_partition, parse_target, parse_vee_set, parse_weight

from .JSONFormat import JSONFormat
from .TXTFormat import TXTFormat
from .ResultData import ResultData, SCHEMA

from ratfert._version import __version__

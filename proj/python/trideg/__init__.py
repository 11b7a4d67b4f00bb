"""Exact analysis of tridimensional hypermatrices over the rationals.

Thin convenience layer over the compiled ``_trideg`` extension: reports come
back as plain dicts, entries go in as nested ``p x q x r`` lists of ints or
``"num/den"`` strings.
"""

import json

try:
    from . import _trideg as _impl  # installed package layout
except ImportError:  # build-tree layout: extension sits next to the package
    import _trideg as _impl

__version__ = _impl.__version__

FormatError = _impl.FormatError
ZeroTensorError = _impl.ZeroTensorError

det_assoc = _impl.det_assoc
essential_format = _impl.essential_format
hyperdet_222 = _impl.hyperdet_222
index_ranks = _impl.index_ranks
schlafli = _impl.schlafli
verify_kernel_triple = _impl.verify_kernel_triple


def classify(entries, hints=None):
    """Full analysis report (degeneracy, conciseness, essential format,
    tensor rank where defined) as a dict."""
    return json.loads(_impl.classify_json(entries, hints))


def analyze_file(path, hints=None):
    """Analyze a tensor document on disk; file-embedded hints are honored."""
    return json.loads(_impl.analyze_file_json(str(path), hints))


def diagnose(entries, axis, point):
    """Point diagnosis on the determinantal scheme along one axis."""
    return json.loads(_impl.diagnose_json(entries, axis, point))

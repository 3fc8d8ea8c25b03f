import hashlib

import dill as pickle

from TileModel.TileAssemblySystem import TileAssemblySystem


class Metadata:

    def __init__(self, md5sum: bytes):
        self._md5sum = md5sum

    @property
    def md5sum(self):
        return self._md5sum

    @md5sum.setter
    def md5sum(self, md5sum: bytes):
        self._md5sum = md5sum

    @staticmethod
    def of_system(system: TileAssemblySystem) -> 'Metadata':
        """Fingerprint of a parsed system; equal for systems read from byte-identical files."""
        tiles = [(t.name, int(t.color), [(g.label, g.strength) for g in t.glues]) for t in system.tileset]
        payload = (system.dim, system.temperature, tuple(system.tileset.palette), tiles,
                   [(loc, idx) for loc, idx in system.seed])
        return Metadata(hashlib.md5(pickle.dumps(payload, protocol=4)).digest())

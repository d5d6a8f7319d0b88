"""Regenerates the PGM test assets in tests/data from scikit-image's bundled samples.

Hosts are 512x512, secrets are 256x256, all 8-bit grayscale.
"""
import os
import sys

import numpy as np
import skimage.data as data
import skimage.io as io
from skimage.color import rgb2gray
from skimage.transform import resize

HERE = os.path.dirname(os.path.abspath(__file__))
OUT = os.path.join(HERE, "..", "data")
SAMPLES = os.path.dirname(data.__file__)


def load(name):
    a = io.imread(os.path.join(SAMPLES, name))
    if a.ndim == 3:
        a = rgb2gray(a[..., :3]) * 255.0
    return a.astype(np.float64)


def to_u8(a):
    return np.clip(np.floor(a + 0.5), 0, 255).astype(np.uint8)


def write_pgm(path, img):
    with open(path, "wb") as f:
        f.write(b"P5\n%d %d\n255\n" % (img.shape[1], img.shape[0]))
        f.write(img.tobytes())


def main():
    os.makedirs(OUT, exist_ok=True)
    for name in ["camera", "gravel", "moon"]:
        write_pgm(os.path.join(OUT, f"host_{name}.pgm"), to_u8(load(name + ".png")))
    for name, src in [("phantom", "phantom.png"), ("cell", "cell.png"), ("retina", "retina.jpg")]:
        small = resize(load(src), (256, 256), anti_aliasing=True, preserve_range=True)
        write_pgm(os.path.join(OUT, f"secret_{name}.pgm"), to_u8(small))
    return 0


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
# Copyright 2026 The dctsteg Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerate the 512x512 grayscale test covers in tests/data/.

The covers come from scikit-image's bundled sample images (public domain /
CC0). Color images are converted with ITU-R 601 luma weights and rounded.
"""
import pathlib

import numpy as np
import skimage.data


def to_gray(img):
    if img.ndim == 2:
        return img.astype(np.uint8)
    rgb = img[..., :3].astype(np.float64)
    y = 0.299 * rgb[..., 0] + 0.587 * rgb[..., 1] + 0.114 * rgb[..., 2]
    return np.clip(np.rint(y), 0, 255).astype(np.uint8)


def write_pgm(path, img):
    h, w = img.shape
    path.write_bytes(b"P5\n%d %d\n255\n" % (w, h) + img.tobytes())


def main():
    out = pathlib.Path(__file__).resolve().parent.parent / "tests" / "data"
    out.mkdir(parents=True, exist_ok=True)
    covers = {
        "camera": skimage.data.camera(),
        "astronaut": skimage.data.astronaut(),
        "moon": skimage.data.moon(),
        "hubble": skimage.data.hubble_deep_field()[180:692, 240:752],
    }
    for name, img in covers.items():
        g = to_gray(img)
        assert g.shape == (512, 512), (name, g.shape)
        write_pgm(out / f"{name}.pgm", g)
        print(name, g.shape, int(g.min()), int(g.max()))


if __name__ == "__main__":
    main()

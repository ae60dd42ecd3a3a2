from setuptools import setup


setup(
  name = "polarcat",
  version = "1.0",
  description = "Polarcat: polar codes over Rayleigh channels degraded into erasure channels",
  packages = ["polarcat", "polarcat.polar", "polarcat.inner",
              "polarcat.channels", "polarcat.experiments"],
  python_requires = ">=3.8",
  install_requires = ["numpy>=1.17", "scipy>=1.4"],
  extras_require = {"test": ["pytest"]},
  entry_points = {"console_scripts": ["polarcat = polarcat.cli:main"]},
)

import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name, sourcedir=""):
        super().__init__(name, sources=[])
        self.sourcedir = str(Path(sourcedir).resolve())


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        out_dir = Path(self.get_ext_fullpath(ext.name)).resolve().parent
        build_dir = Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)
        config = "Debug" if self.debug else "Release"
        subprocess.run(
            [
                "cmake",
                ext.sourcedir,
                f"-DCMAKE_BUILD_TYPE={config}",
                f"-DSYMSPEC_EXT_OUTPUT_DIR={out_dir}",
                f"-DPython3_EXECUTABLE={sys.executable}",
                "-DSYMSPEC_PYTHON_ONLY=ON",
            ],
            cwd=build_dir,
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", ".", "--target", "_core", f"-j{os.cpu_count() or 2}"],
            cwd=build_dir,
            check=True,
        )


setup(ext_modules=[CMakeExtension("symspec._core")], cmdclass={"build_ext": CMakeBuild})

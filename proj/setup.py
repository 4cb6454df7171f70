import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])
        self.source_dir = str(Path(__file__).parent.resolve())


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        out_dir = Path(self.get_ext_fullpath(ext.name)).parent.resolve()
        build_dir = Path(self.build_temp) / ext.name
        build_dir.mkdir(parents=True, exist_ok=True)

        cfg = "Debug" if self.debug else "Release"
        configure = [
            "cmake",
            ext.source_dir,
            f"-DCMAKE_BUILD_TYPE={cfg}",
            f"-DADDCHAIN_PYTHON_OUTPUT_DIR={out_dir}",
            "-DADDCHAIN_BUILD_TESTS=OFF",
            f"-DPython3_EXECUTABLE={sys.executable}",
        ]
        build = ["cmake", "--build", ".", "--target", "_core",
                 f"-j{os.cpu_count() or 2}"]
        subprocess.run(configure, cwd=build_dir, check=True)
        subprocess.run(build, cwd=build_dir, check=True)


setup(
    packages=["addchain"],
    package_dir={"": "python"},
    ext_modules=[CMakeExtension("addchain._core")],
    cmdclass={"build_ext": CMakeBuild},
    zip_safe=False,
)

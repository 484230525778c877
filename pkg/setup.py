from setuptools import setup, find_packages

with open("README.md", "r", encoding="utf-8") as fh:
	long_description = fh.read()

setup(
	name="QuarterWalkComp",
	version="1.0.0",
	packages=find_packages(exclude=["tests", "tests.*"]),
	package_data={"": ["*.md"]},
	include_package_data=True,
	description="Exact enumeration and asymptotics of quarter plane walks with boundary dependent steps by the compensation approach.",
	long_description=long_description,
	long_description_content_type="text/markdown",
	install_requires=[
		"numpy>=1.23.1",
		"pandas>=1.5.0",
	],
	extras_require={
		"dev": ["pylint==3.0.2", "ruff==0.1.13"],
		"doc": "pdoc==14.1.0",
	},
	entry_points={
		"console_scripts": ["quarterwalk = QuarterWalkComp.cli:main"],
	},
	python_requires=">=3.10",
)

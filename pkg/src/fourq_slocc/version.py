APP_NAME = "Four-Qubit SLOCC Toolkit"
# Increment MAJOR_VERSION manually for significant releases.
MAJOR_VERSION = "1"
# Increment BUILD_VERSION for each packaged build.
BUILD_VERSION = "3"
APP_TITLE = f"{APP_NAME} (Build {BUILD_VERSION})"

"""
配置管理模块 - capacity caps and parallelism for the epglab engines
"""

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict
from dotenv import load_dotenv

# 加载环境变量
load_dotenv()


class Settings(BaseSettings):
    """应用配置"""

    # 并行度 (EPGLAB_THREADS)
    threads: int = Field(default=1, ge=1)

    # 最长路引擎
    detour_cap: int = Field(default=26, ge=1)
    detour_dp_limit: int = Field(default=20, ge=1)

    # 可解析集枚举
    enum_cap: int = Field(default=16, ge=1)
    dimension_budget: int = Field(default=5_000_000, ge=1)

    # 特征多项式
    charpoly_cap: int = Field(default=128, ge=1)

    # 同构回溯搜索
    iso_cap: int = Field(default=64, ge=1)

    log_level: str = "WARNING"

    app_name: str = "epglab"
    app_version: str = "0.1.0"

    model_config = SettingsConfigDict(
        env_prefix="EPGLAB_",
        env_file=".env",
        case_sensitive=False,
        extra="ignore",
    )

    def with_overrides(self, **overrides) -> "Settings":
        """复制配置并应用非空的覆盖项（命令行参数）"""
        values = {k: v for k, v in overrides.items() if v is not None}
        return self.model_copy(update=values)


# 创建全局配置实例
settings = Settings()
